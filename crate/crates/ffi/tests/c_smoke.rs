// Builds tests/c/smoke.c against the generated header and the static library.
use std::path::PathBuf;
use std::process::Command;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // `cargo test` only leaves the archive under deps/
    let dir = profile_dir();
    let lib = [
        dir.join("libs3harm_ffi.a"),
        dir.join("deps/libs3harm_ffi.a"),
    ]
    .into_iter()
    .find(|p| p.exists())
    .expect("libs3harm_ffi.a not built");
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("s3harm_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());

    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl"])
        .arg("-o")
        .arg(&out)
        .status()
        .expect("C compiler not runnable");
    assert!(status.success(), "compiling smoke.c failed");

    let run = Command::new(&out).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(
        run.status.success(),
        "{stdout}{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(stdout.starts_with("ok "), "{stdout}");
}
