//! Builds a small C program against the generated header and the shared
//! library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "schubert.h"

int main(void) {
    SchubertTensor *t = NULL;
    const char *json = "{\"rank\":2,\"coeffs\":[{\"partition\":[],\"coeff\":\"1\"},{\"partition\":[2,2],\"coeff\":\"1\"}]}";
    if (schubert_tensor_from_json(json, &t) != SCHUBERT_STATUS_OK) return 10;
    SchubertVerdict v;
    if (schubert_tensor_decomposable(t, &v) != SCHUBERT_STATUS_OK) return 11;
    if (v != SCHUBERT_VERDICT_NOT_DECOMPOSABLE) return 12;
    schubert_tensor_free(t);

    char *ideal = NULL;
    if (schubert_ideal_text(2, 4, &ideal) != SCHUBERT_STATUS_OK) return 13;
    if (strcmp(ideal, "a[1,1]*a[2] - a[1]*a[2,1] + a[]*a[2,2]\n") != 0) return 14;
    schubert_string_free(ideal);

    if (schubert_tensor_from_json("{", &t) != SCHUBERT_STATUS_PARSE_ERROR) return 15;
    if (schubert_last_error() == NULL) return 16;
    printf("ok\n");
    return 0;
}
"#;

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    assert!(include.join("schubert.h").exists(), "header is generated by the build script");
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join(if cfg!(target_os = "macos") { "libschubert_ffi.dylib" } else { "libschubert_ffi.so" });
    if !lib.exists() || cfg!(windows) {
        eprintln!("shared library not found at {}; skipping", lib.display());
        return;
    }
    let work = std::env::temp_dir().join(format!("schubert-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let exe = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg("-L")
        .arg(&profile_dir)
        .arg("-lschubert_ffi")
        .arg(format!("-Wl,-rpath,{}", profile_dir.display()))
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C build failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
