use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use qtoric::charnums;

fn qtoric(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtoric"))
        .current_dir(dir)
        .env_remove("QTORIC_CACHE_DIR")
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn presets(dir: &Path) {
    for args in [
        &["preset", "cpn", "1", "-o", "cp1.json"][..],
        &["preset", "cpn", "2", "-o", "cp2.json"],
        &["preset", "product", "cp1.json", "cp1.json", "-o", "cp1xcp1.json"],
        &["preset", "hirzebruch", "1", "-o", "h1.json"],
    ] {
        let o = qtoric(dir, args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn preset_files() {
    let t = tempfile::tempdir().unwrap();
    presets(t.path());
    let cp2: serde_json::Value = serde_json::from_slice(&fs::read(t.path().join("cp2.json")).unwrap()).unwrap();
    assert_eq!(cp2["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(cp2["facets"].as_array().unwrap().len(), 3);
    let sq: serde_json::Value = serde_json::from_slice(&fs::read(t.path().join("cp1xcp1.json")).unwrap()).unwrap();
    assert_eq!(sq["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(sq["facets"].as_array().unwrap().len(), 4);
    let h1: serde_json::Value = serde_json::from_slice(&fs::read(t.path().join("h1.json")).unwrap()).unwrap();
    assert_eq!(h1["vertices"].as_array().unwrap().len(), 4);
    assert!(h1["lambda"].as_array().unwrap().contains(&serde_json::json!([-1, 1])));

    let o = qtoric(t.path(), &["preset", "cpn", "2"]);
    assert_eq!(o.stdout, fs::read(t.path().join("cp2.json")).unwrap());
    for bad in [&["preset", "cpn", "0"][..], &["preset", "cpn", "two"], &["preset", "cube", "3"], &["preset", "cpn"]] {
        assert_eq!(qtoric(t.path(), bad).status.code(), Some(1), "{bad:?}");
    }
    assert_eq!(qtoric(t.path(), &["preset", "product", "cp1.json", "nope.json"]).status.code(), Some(2));
}

#[test]
fn validate_reports() {
    let t = tempfile::tempdir().unwrap();
    presets(t.path());
    let o = qtoric(t.path(), &["validate", "cp2.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stderr(&o), "valid; 3 facets; dets [1,-1,1]\n");

    let text = fs::read_to_string(t.path().join("cp2.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["lambda"][2] = serde_json::json!([0, 2]);
    fs::write(t.path().join("bad.json"), v.to_string()).unwrap();
    let o = qtoric(t.path(), &["validate", "bad.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("nondegeneracy fails at facet 1: det = -2"), "{}", stderr(&o));

    assert_eq!(qtoric(t.path(), &["validate", "missing.json"]).status.code(), Some(2));
    for (name, edit) in [
        ("ragged.json", serde_json::json!({"lambda": [[-1, -1], [1, 0], [0]]})),
        ("range.json", serde_json::json!({"facets": [[1, 2], [0, 5], [0, 1]]})),
        ("base.json", serde_json::json!({"base_facet": 3})),
        ("float.json", serde_json::json!({"m": 2.0})),
        ("extra.json", serde_json::json!({"colour": "red"})),
    ] {
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for (k, x) in edit.as_object().unwrap() {
            v[k] = x.clone();
        }
        fs::write(t.path().join(name), v.to_string()).unwrap();
        assert_eq!(qtoric(t.path(), &["validate", name]).status.code(), Some(2), "{name}");
    }
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v.as_object_mut().unwrap().remove("vertices");
    fs::write(t.path().join("nov.json"), v.to_string()).unwrap();
    assert_eq!(qtoric(t.path(), &["validate", "nov.json"]).status.code(), Some(2));
}

#[test]
fn charnums_tables() {
    let t = tempfile::tempdir().unwrap();
    presets(t.path());
    let o = qtoric(t.path(), &["charnums", "cp2.json", "--all"]);
    assert_eq!(stdout(&o), "2\t3\n1,1\t3\n");
    let o = qtoric(t.path(), &["charnums", "cp1xcp1.json", "--composition", "2"]);
    assert_eq!(stdout(&o), "2\t0\n");
    let o = qtoric(t.path(), &["charnums", "h1.json", "--all"]);
    assert_eq!(stdout(&o), "2\t0\n1,1\t4\n");
    assert_eq!(qtoric(t.path(), &["charnums", "cp2.json", "--composition", "3"]).status.code(), Some(1));
    assert_eq!(qtoric(t.path(), &["charnums", "cp2.json", "--composition", "1,x"]).status.code(), Some(2));
    assert_eq!(qtoric(t.path(), &["charnums", "cp2.json"]).status.code(), Some(2));

    let o = qtoric(t.path(), &["charnums", "cp2.json", "--all", "--permute", "2,0,1"]);
    assert_eq!(stdout(&o), "2\t3\n1,1\t3\n");
    assert_eq!(qtoric(t.path(), &["charnums", "cp2.json", "--all", "--permute", "0,0,1"]).status.code(), Some(1));
}

#[test]
fn charnums_json_round_trips() {
    let t = tempfile::tempdir().unwrap();
    qtoric(t.path(), &["preset", "cpn", "4", "-o", "cp4.json"]);
    let tsv = stdout(&qtoric(t.path(), &["charnums", "cp4.json", "--all"]));
    let json = stdout(&qtoric(t.path(), &["charnums", "cp4.json", "--all", "--json"]));
    let table = charnums::from_json(&json).unwrap();
    assert_eq!(charnums::to_tsv(&table), tsv);
    assert_eq!(charnums::to_json("CP^4", 4, &table), json);
}

#[test]
fn hopf_commands() {
    let t = tempfile::tempdir().unwrap();
    let o = qtoric(t.path(), &["coproduct", "--degree", "2"]);
    assert_eq!(stdout(&o), "Z2⊗1 + 2 Z1⊗Z1 + 1⊗Z2\n");
    let o = qtoric(t.path(), &["coproduct", "--degree", "0"]);
    assert_eq!(stdout(&o), "1⊗1\n");
    let o = qtoric(t.path(), &["antipode", "--degree", "2"]);
    assert_eq!(stdout(&o), "-Z2 + 2 Z1.Z1\n");
    let o = qtoric(t.path(), &["antipode", "--degree", "1"]);
    assert_eq!(stdout(&o), "-Z1\n");
}

#[test]
fn checks_and_fault_injection() {
    let t = tempfile::tempdir().unwrap();
    let o = qtoric(t.path(), &["check", "conjecture15", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
    assert_eq!(qtoric(t.path(), &["check", "coassoc", "--max-degree", "5"]).status.code(), Some(0));
    let alias = qtoric(t.path(), &["check", "coaction-square", "--max-degree", "6"]);
    assert_eq!(alias.stdout, o.stdout);

    let o = qtoric(t.path(), &["check", "conjecture15", "--max-degree", "5", "--inject-fault", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("3\tFAIL"));
    assert!(stderr(&o).starts_with("coaction-square: first discrepancy at degree 3"));
    let o = qtoric(t.path(), &["check", "coassoc", "--max-degree", "4", "--inject-fault", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("degree 3"));
    assert_eq!(qtoric(t.path(), &["check", "coassoc", "--max-degree", "0"]).status.code(), Some(1));
    assert_eq!(qtoric(t.path(), &["check", "other", "--max-degree", "3"]).status.code(), Some(2));
}

#[test]
fn kernels() {
    let t = tempfile::tempdir().unwrap();
    presets(t.path());
    assert_eq!(stdout(&qtoric(t.path(), &["kernel", "cp2.json"])), "rank 1; basis: (1,1,1)\n");
    assert!(stdout(&qtoric(t.path(), &["kernel", "cp1xcp1.json"])).starts_with("rank 2"));
    let ident = r#"{"name": "id", "m": 2, "vertices": ["a", "b"], "facets": [[0, 1]], "lambda": [[1, 0], [0, 1]]}"#;
    fs::write(t.path().join("id.json"), ident).unwrap();
    assert_eq!(stdout(&qtoric(t.path(), &["kernel", "id.json"])), "rank 0\n");
    let doubled = ident.replace("[0, 1]]}", "[0, 2]]}");
    fs::write(t.path().join("x2.json"), doubled).unwrap();
    let o = qtoric(t.path(), &["kernel", "x2.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("surjective"), "{}", stderr(&o));
}

#[test]
fn disk_cache_is_used_and_checked() {
    let t = tempfile::tempdir().unwrap();
    let cache = t.path().join("cache");
    qtoric(t.path(), &["preset", "cpn", "3", "-o", "cp3.json"]);
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qtoric"))
            .current_dir(t.path())
            .env("QTORIC_CACHE_DIR", &cache)
            .args(["charnums", "cp3.json", "--all"])
            .output()
            .unwrap()
    };
    let first = run();
    let entries: Vec<_> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(run().stdout, first.stdout);

    // a tampered entry is rejected and recomputed
    let text = fs::read_to_string(&entries[0]).unwrap();
    assert!(text.contains("3,0,0,0\t1\n"));
    fs::write(&entries[0], text.replace("3,0,0,0\t1\n", "3,0,0,0\t2\n")).unwrap();
    assert_eq!(run().stdout, first.stdout);
    fs::write(&entries[0], text.replace("\t1\n", "\t-1\n")).unwrap();
    assert_eq!(run().stdout, first.stdout);
    fs::write(&entries[0], "garbage").unwrap();
    assert_eq!(run().stdout, first.stdout);
}
