//! End-to-end tests against the built binary: golden output bytes, the exit
//! code contract (0 pass, 1 identity violation, 2 usage), and determinism.

use std::process::{Command, Output};

fn humplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_humplab"))
        .args(args)
        .env_remove("HUMPLAB_MAX_ENUM_N")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = humplab(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn seq_hc_closed_csv_golden() {
    assert_eq!(
        stdout_of(&["seq", "HC", "--from", "1", "--to", "3", "--format", "csv"]),
        "n,value\n1,1\n2,3\n3,10\n"
    );
}

#[test]
fn seq_hs40_reproduces_the_twelve_listed_values() {
    assert_eq!(
        stdout_of(&["seq", "HS40", "--from", "1", "--to", "12", "--format", "csv"]),
        "n,value\n1,2\n2,5\n3,12\n4,35\n5,100\n6,315\n7,980\n8,3234\n9,10584\n10,36036\n11,121968\n12,424710\n"
    );
}

#[test]
fn seq_hook_sum_route() {
    assert_eq!(
        stdout_of(&["seq", "S", "2", "1", "--from", "1", "--to", "3", "--format", "csv"]),
        "n,value\n1,1\n2,2\n3,4\n"
    );
}

#[test]
fn seq_json_renders_values_as_decimal_strings() {
    assert_eq!(
        stdout_of(&["seq", "HM", "--from", "0", "--to", "4", "--format", "json"]),
        r#"[{"n":0,"value":"0"},{"n":1,"value":"0"},{"n":2,"value":"1"},{"n":3,"value":"3"},{"n":4,"value":"9"}]"#
            .to_owned()
            + "\n"
    );
}

#[test]
fn seq_values_never_hit_float_formatting() {
    // C(79, 40) has 23 digits; any float round-trip would mangle it.
    let out = stdout_of(&["seq", "HC", "--from", "40", "--to", "40", "--format", "csv"]);
    assert_eq!(out, "n,value\n40,53753604366668088230810\n");
}

#[test]
fn seq_hump_seed_conventions_are_both_exposed() {
    // Recurrence route carries the seed value 1 at n = 0 ...
    assert_eq!(
        stdout_of(&["seq", "HC", "--route", "rec", "--from", "0", "--to", "2", "--format", "csv"]),
        "n,value\n0,1\n1,1\n2,3\n"
    );
    // ... while the enumeration route reports the actual hump total 0.
    assert_eq!(
        stdout_of(&["seq", "HC", "--route", "enum", "--from", "0", "--to", "2", "--format", "csv"]),
        "n,value\n0,0\n1,1\n2,3\n"
    );
}

#[test]
fn seq_b_is_the_halved_trinomial_sum() {
    assert_eq!(
        stdout_of(&["seq", "B", "--from", "0", "--to", "4", "--format", "csv"]),
        "n,value\n0,0\n1,0\n2,1\n3,3\n4,9\n"
    );
}

#[test]
fn seq_usage_errors_exit_2() {
    for args in [
        &["seq", "HC", "--from", "0"][..],             // closed route starts at 1
        &["seq", "SD", "--route", "rec"][..],          // route not available
        &["seq", "catalan", "--route", "rec"][..],     // route not available
        &["seq", "S", "2", "1", "--route", "closed", "--from", "1"][..], // below formula floor
        &["seq", "S", "9", "9", "--route", "closed"][..], // no closed form
        &["seq", "S", "2"][..],                        // missing parameter
        &["seq", "nope"][..],                          // unknown sequence
        &["seq", "HC", "--from", "5", "--to", "3"][..], // empty range
        &["seq", "HC", "--route", "enum", "--to", "15"][..], // above cap
    ] {
        let out = humplab(args);
        assert_eq!(exit_code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
    }
}

#[test]
fn enumerate_dyck_2_with_humps_golden() {
    assert_eq!(
        stdout_of(&["enumerate", "dyck", "2", "--with-humps", "--format", "csv"]),
        "path,humps\nUUDD,1\nUDUD,2\n# total_paths=2 total_humps=3\n"
    );
}

#[test]
fn enumerate_motzkin_2_totals() {
    assert_eq!(
        stdout_of(&["enumerate", "motzkin", "2", "--with-humps", "--format", "csv"]),
        "path,humps\nUD,1\nFF,0\n# total_paths=2 total_humps=1\n"
    );
}

#[test]
fn enumerate_dyck_0_yields_one_empty_path() {
    assert_eq!(
        stdout_of(&["enumerate", "dyck", "0", "--with-humps", "--format", "csv"]),
        "path,humps\n,0\n# total_paths=1 total_humps=0\n"
    );
}

#[test]
fn enumerate_json_shape() {
    let out = stdout_of(&["enumerate", "double-dyck", "1", "--with-humps", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["family"], "double-dyck");
    assert_eq!(value["count"], "1");
    assert_eq!(value["total_humps"], "2");
    assert_eq!(value["paths"][0]["path"], "UDUD");
    assert_eq!(value["paths"][0]["humps"], 2);
}

#[test]
fn enumerate_usage_errors_exit_2() {
    let humps_on_super = humplab(&["enumerate", "super-dyck", "2", "--with-humps"]);
    assert_eq!(exit_code(&humps_on_super), 2);

    let over_cap = humplab(&["enumerate", "dyck", "15"]);
    assert_eq!(exit_code(&over_cap), 2);

    let unknown = humplab(&["enumerate", "zigzag", "3"]);
    assert_eq!(exit_code(&unknown), 2);
}

#[test]
fn enumeration_caps_honor_flag_and_environment() {
    let flagged = humplab(&["enumerate", "dyck", "3", "--max-enum-n", "2"]);
    assert_eq!(exit_code(&flagged), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_humplab"))
        .args(["enumerate", "dyck", "3"])
        .env("HUMPLAB_MAX_ENUM_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // The flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_humplab"))
        .args(["enumerate", "dyck", "3", "--max-enum-n", "5"])
        .env("HUMPLAB_MAX_ENUM_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_single_identity_passes() {
    let out = humplab(&["verify", "dyck-humps-31", "--to", "60"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  dyck-humps-31"), "{text}");
}

#[test]
fn verify_all_passes_on_a_small_budget() {
    let out = humplab(&["verify", "all", "--to", "30", "--enum-to", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("checked 30 identities: all pass"), "{text}");
}

#[test]
fn verify_json_report_schema() {
    let out = stdout_of(&["verify", "half-catalan-binomial", "--to", "10", "--format", "json"]);
    let reports: serde_json::Value = serde_json::from_str(&out).unwrap();
    let report = &reports[0];
    assert_eq!(report["id"], "half-catalan-binomial");
    assert_eq!(report["lo"], 1);
    assert_eq!(report["hi"], 10);
    assert_eq!(report["pass"], true);
    assert!(report["failures"].as_array().unwrap().is_empty());
    assert!(report["elapsed_ms"].is_number());
}

#[test]
fn verify_usage_errors_exit_2() {
    for args in [
        &["verify", "unknown-id"][..],
        &["verify", "motzkin-path-222", "--from", "1", "--to", "5"][..], // below floor
        &["verify", "dyck-humps-31", "--from", "5", "--to", "3"][..],    // empty range
        &["verify", "hm-equals-s21-minus-1", "--to", "100"][..],         // above cap
        &["verify", "all", "--from", "3"][..],                           // --from with all
        &["verify", "dyck-humps-31", "--enum-to", "5"][..],              // --enum-to without all
    ] {
        let out = humplab(args);
        assert_eq!(exit_code(&out), 2, "{args:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["seq", "HC", "--from", "1", "--to", "40", "--format", "json"][..],
        &["enumerate", "motzkin", "5", "--with-humps", "--format", "csv"][..],
        &["verify", "all", "--to", "20", "--enum-to", "4", "--format", "csv"][..],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?}");
    }
}

#[test]
fn missing_subcommand_exits_2() {
    let out = humplab(&[]);
    assert_eq!(exit_code(&out), 2);
}
