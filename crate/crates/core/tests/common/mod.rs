//! Dense-matrix reference simulator. Gates are lifted to full `2^n × 2^n`
//! operators with Kronecker products, qubit 0 as the leftmost factor.

#![allow(dead_code)]

use num_complex::Complex64;

pub type Matrix = Vec<Vec<Complex64>>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| c(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect()
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn apply(m: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn rx(t: f64) -> Matrix {
    let (h_cos, h_sin) = ((t / 2.0).cos(), (t / 2.0).sin());
    vec![
        vec![c(h_cos, 0.0), c(0.0, -h_sin)],
        vec![c(0.0, -h_sin), c(h_cos, 0.0)],
    ]
}

pub fn ry(t: f64) -> Matrix {
    let (h_cos, h_sin) = ((t / 2.0).cos(), (t / 2.0).sin());
    vec![
        vec![c(h_cos, 0.0), c(-h_sin, 0.0)],
        vec![c(h_sin, 0.0), c(h_cos, 0.0)],
    ]
}

pub fn rz(t: f64) -> Matrix {
    vec![
        vec![c((t / 2.0).cos(), -(t / 2.0).sin()), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c((t / 2.0).cos(), (t / 2.0).sin())],
    ]
}

/// `⊗_k (k == wire ? g : I)`
pub fn lift(g: &Matrix, wire: usize, n: usize) -> Matrix {
    let mut out = vec![vec![c(1.0, 0.0)]];
    for k in 0..n {
        let id = identity(2);
        out = kron(&out, if k == wire { g } else { &id });
    }
    out
}

/// `P0_c ⊗ I + P1_c ⊗ X_t`
pub fn cnot(control: usize, target: usize, n: usize) -> Matrix {
    let p0 = vec![
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0)],
    ];
    let p1 = vec![
        vec![c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(1.0, 0.0)],
    ];
    let x = vec![
        vec![c(0.0, 0.0), c(1.0, 0.0)],
        vec![c(1.0, 0.0), c(0.0, 0.0)],
    ];
    let mut keep = vec![vec![c(1.0, 0.0)]];
    let mut flip = vec![vec![c(1.0, 0.0)]];
    for k in 0..n {
        let id = identity(2);
        keep = kron(&keep, if k == control { &p0 } else { &id });
        flip = kron(
            &flip,
            if k == control {
                &p1
            } else if k == target {
                &x
            } else {
                &id
            },
        );
    }
    add(&keep, &flip)
}

/// Full unitary of a layered circuit with flat angles `[layer][qubit][axis]`.
pub fn circuit_unitary(layers: usize, n: usize, omega: &[f64]) -> Matrix {
    let mut u = identity(1 << n);
    for l in 0..layers {
        for q in 0..n {
            let base = (l * n + q) * 3;
            let rot = mul(
                &rz(omega[base + 2]),
                &mul(&ry(omega[base + 1]), &rx(omega[base])),
            );
            u = mul(&lift(&rot, q, n), &u);
        }
        if n > 1 {
            for i in 0..n {
                u = mul(&cnot(i, (i + 1) % n, n), &u);
            }
        }
    }
    u
}

/// ⟨Z⟩ on qubit 0 computed as ψ† (Z ⊗ I…) ψ.
pub fn z0_expectation(psi: &[Complex64], n: usize) -> f64 {
    let z = vec![
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(-1.0, 0.0)],
    ];
    let zpsi = apply(&lift(&z, 0, n), psi);
    psi.iter().zip(&zpsi).map(|(a, b)| (a.conj() * b).re).sum()
}
