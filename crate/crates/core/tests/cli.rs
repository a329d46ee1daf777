use rouquier::cli::{run, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rouquier").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const EXAMPLE: [&str; 10] = [
    "g",
    "--e",
    "3",
    "--mc",
    "0,1",
    "--rouquier-gap",
    "2",
    "--lambda-quotient",
    "-|1|-;-|1|-",
    "--mu-quotient",
];

#[test]
fn graded_example() {
    let mut args = EXAMPLE.to_vec();
    args.extend(["-|1|1;-|-|-", "--graded"]);
    let (code, out, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "2v^2");
    args.pop();
    let (_, out, _) = call(&args);
    assert_eq!(out.trim(), "2");
}

#[test]
fn same_example_as_multipartitions() {
    // compose the quotients first, then feed the multipartitions back in
    let (_, l, _) = call(&["core", "--e", "3", "--mc", "0,1", "--rouquier-gap", "2", "--quotient", "-|1|-;-|1|-", "--json"]);
    let (_, m, _) = call(&["core", "--e", "3", "--mc", "0,1", "--rouquier-gap", "2", "--quotient", "-|1|1;-|-|-", "--json"]);
    let l: Value = serde_json::from_str(&l).unwrap();
    let m: Value = serde_json::from_str(&m).unwrap();
    assert_eq!(l["multicore"], m["multicore"]);
    assert_eq!(l["hook"], 2);
    assert_eq!(l["quotient"][1][1][0], 1);
}

#[test]
fn json_record() {
    let mut args = vec!["--json"];
    args.extend(EXAMPLE);
    args.extend(["-|1|1;-|-|-", "--graded"]);
    let (code, out, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], serde_json::json!({"2": 2}));
    assert_eq!(v["rouquier"], true);
    assert_eq!(v["conjectural"], false);
    assert_eq!(v["charp_valid_for"], "p=0 or p>2");
    let again = call(&args).1;
    assert_eq!(again, out);
}

#[test]
fn diagonal_is_one() {
    let mut args = EXAMPLE.to_vec();
    args.extend(["-|1|-;-|1|-", "--graded"]);
    args[8] = "-|1|1;-|-|-";
    args[10] = "-|1|1;-|-|-";
    let (code, out, _) = call(&args);
    assert_eq!(code, EXIT_OK, "{args:?}");
    assert_eq!(out.trim(), "1");
}

#[test]
fn verify_small_block() {
    let (code, out, _) = call(&["verify", "--e", "2", "--mc", "0", "--block-of", "2", "--max-hook", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("all pairs match"));
    let (code, out, _) = call(&["verify", "--e", "3", "--mc", "0,1", "--block-of", "3,1;2", "--max-hook", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["g", "--e", "3", "--mc", "0,x", "--lambda", "1;-", "--mu", "-;1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--mc"));
    let (code, _, err) = call(&["g", "--e", "3", "--mc", "0,1", "--lambda", "1;-", "--mu", "-;1,"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--mu"));
    let (code, _, err) = call(&["g", "--e", "3", "--mc", "0,1", "--lambda", "1", "--mu", "-;1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--lambda"));
    let (code, _, err) = call(&["g", "--e", "3", "--mc", "0,1", "--lambda", "1;-", "--mu", "-;1"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(err.contains("approx_equiv"));
    let (code, _, _) = call(&["g", "--e", "3"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = call(&["canon", "--e", "2", "--mc", "0", "--block-of", "1,1"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn lr_and_blocks() {
    assert_eq!(call(&["lr", "--outer", "3,2,1", "--factors", "2,1;2,1"]).1.trim(), "2");
    assert_eq!(call(&["lr", "--outer", "3,2,1", "--factors", "2;1;2,1"]).1.trim(), "3");
    let (code, out, _) = call(&["block", "--e", "2", "--mc", "0,1", "--of", "2;-", "--json", "--members"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let classes = v["classes"].as_array().unwrap();
    assert!(classes.len() >= 2);
    let (code, out, _) = call(&["rouquier-check", "--e", "3", "--mc", "0,1", "--of", "9,7,5,3,1,1;2,2,1,1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["d"][0], serde_json::json!([1, 4]));
    assert_eq!(v["rouquier"], true);
    let (_, out, _) = call(&["rock-check", "--e", "3", "--mc", "0", "--of", "2", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["pi"].is_array());
}

#[test]
fn scopes_and_rock() {
    let (code, out, _) = call(&["scopes", "--e", "2", "--mc", "0", "--of", "3,1", "--i", "1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let image = v["image"].as_str().unwrap().to_string();
    let (_, back, _) = call(&["scopes", "--e", "2", "--mc", "0", "--of", &image, "--i", "1", "--json"]);
    let back: Value = serde_json::from_str(&back).unwrap();
    assert_eq!(back["image"], "3,1");
    let (code, out, _) = call(&[
        "rock-g", "--e", "3", "--mc", "0,1", "--rouquier-gap", "2", "--lambda-quotient", "-|1|-;-|1|-", "--mu-quotient", "-|1|1;-|-|-",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "2");
}

#[test]
fn conjecture_is_flagged() {
    let (code, out, _) = call(&[
        "schur-conj", "--e", "2", "--mc", "0", "--rouquier-gap", "2", "--lambda-quotient", "1,1|-", "--mu-quotient", "1,1|-", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["conjectural"], true);
    assert_eq!(v["value"], serde_json::json!({"0": 1}));
}

#[test]
fn canon_and_q() {
    let (code, out, _) = call(&["canon", "--e", "3", "--mc", "0", "--block-of", "3", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["columns"], serde_json::json!(["3", "2,1"]));
    let (code, out, _) = call(&["q", "--e", "2", "--mc", "0", "--rouquier-gap", "1", "--mu-quotient", "-|1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn version_names_the_formula() {
    let (code, out, _) = call(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("ω(λ)−ω(μ)"));
}
