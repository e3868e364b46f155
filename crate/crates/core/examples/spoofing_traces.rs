//! Writes a genuine flight and its four spoofed variants to a temp dir.

use qgan_mav::navdata::{apply_attack, load_trace, save_trace, synth_trace, AttackKind};

fn main() -> qgan_mav::Result<()> {
    let dir = std::env::temp_dir().join("qgan-mav-spoofing");
    std::fs::create_dir_all(&dir).map_err(|e| qgan_mav::Error::Io {
        path: dir.clone(),
        source: e,
    })?;

    let genuine = synth_trace(1, 0.0)?;
    let path = dir.join(genuine.label().file_name("flight"));
    save_trace(&genuine, &path)?;
    println!("{}", path.display());

    let probe = genuine.samples()[6];
    for kind in AttackKind::ALL {
        let faked = apply_attack(&genuine, kind);
        let path = dir.join(faked.label().file_name("flight"));
        save_trace(&faked, &path)?;
        let back = load_trace(&path)?;
        let s = back.samples()[6];
        println!(
            "{:<8} t={:.1}  ({:+.3}, {:+.3}, {:+.3}) → ({:+.3}, {:+.3}, {:+.3})",
            kind, s.t, probe.vx, probe.vy, probe.vz, s.vx, s.vy, s.vz
        );
    }
    Ok(())
}
