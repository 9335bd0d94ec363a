//! End-to-end tests of the `scsrc` binary: exit codes, formats, and
//! round trips, all through the real process boundary.

use std::fs;
use std::path::Path;
use std::process::Output;

fn scsrc(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_scsrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_tgreedy_overlaps_two_reads() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.fasta", ">a\natg\n>b\ntga\n");
    let out = scsrc(&["solve", &input, "--algorithm", "tgreedy"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with(">superstring algorithm=tgreedy length=4\n"));
    assert!(text.contains("\natga\n"));
}

#[test]
fn solve_accepts_uppercase_multiline_crlf_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.fasta", ">a\r\nAT\r\nG\r\n\r\n; comment\r\n>b\r\nTGA\r\n");
    let out = scsrc(&["solve", &input, "--algorithm", "greedy"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("length=4"));
}

#[test]
fn solve_empty_fasta_emits_empty_superstring() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "empty.fasta", "");
    let out = scsrc(&["solve", &input, "--algorithm", "mgreedy"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with(">superstring algorithm=mgreedy length=0\n"));
}

#[test]
fn invalid_alphabet_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.fasta", ">a\natgn\n");
    let out = scsrc(&["solve", &input, "--algorithm", "greedy"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn empty_sequence_record_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.fasta", ">a\n>b\natg\n");
    let out = scsrc(&["solve", &input, "--algorithm", "greedy"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn exact_writes_fasta_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.fasta", ">a\natg\n>b\ntga\n");
    let solution = dir.path().join("opt.fasta");
    let out = scsrc(&["exact", &input, "--output", solution.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let fasta = fs::read_to_string(&solution).unwrap();
    assert!(fasta.contains("algorithm=exact length=4"));
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("opt.fasta.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["length"], 4);
    assert_eq!(sidecar["reads_before"], 2);
    assert!(sidecar["nodes_explored"].as_u64().unwrap() >= 1);
}

/// Eleven same-length reads, none the reverse complement of another (they
/// end in {a,c,g} while reverse complements of such strings end in t), so
/// preprocessing keeps all eleven and the exact solver refuses.
fn eleven_reads() -> String {
    let digits = [b'a', b'c', b'g'];
    let mut text = String::new();
    for i in 0..11usize {
        let (d0, d1, d2) = (digits[i % 3], digits[(i / 3) % 3], digits[(i / 9) % 3]);
        text.push_str(&format!(
            ">r{i}\naa{}{}{}\n",
            d0 as char, d1 as char, d2 as char
        ));
    }
    text
}

#[test]
fn exact_over_the_size_cap_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "big.fasta", &eleven_reads());
    let out = scsrc(&["exact", &input]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn gen_is_deterministic_and_writes_seed_comment() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "gen",
        "--genome-length",
        "12",
        "--reads",
        "4",
        "--read-length",
        "5",
        "--rc-prob",
        "0.5",
        "--seed",
        "7",
    ];
    let first = scsrc(&args);
    let second = scsrc(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with(";seed=7 prng=chacha8"));
    assert_eq!(text.matches('>').count(), 4);

    let path = dir.path().join("gen.fasta");
    let mut file_args = args.to_vec();
    file_args.extend(["--output", path.to_str().unwrap()]);
    let filed = scsrc(&file_args);
    assert_eq!(code(&filed), 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn gen_rejects_bad_configs_with_exit_2() {
    let bad_prob = scsrc(&[
        "gen",
        "--genome-length",
        "10",
        "--reads",
        "2",
        "--read-length",
        "4",
        "--rc-prob",
        "1.5",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&bad_prob), 2);
    let long_read = scsrc(&[
        "gen",
        "--genome-length",
        "4",
        "--reads",
        "2",
        "--read-length",
        "5",
        "--rc-prob",
        "0.5",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&long_read), 2);
}

#[test]
fn gen_solve_verify_round_trip_for_every_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("inst.fasta");
    let gend = scsrc(&[
        "gen",
        "--genome-length",
        "20",
        "--reads",
        "6",
        "--read-length",
        "6",
        "--rc-prob",
        "0.75",
        "--seed",
        "99",
        "--output",
        instance.to_str().unwrap(),
    ]);
    assert_eq!(code(&gend), 0);
    for algorithm in ["mgreedy", "greedy", "tgreedy"] {
        let solution = dir.path().join(format!("{algorithm}.fasta"));
        let solved = scsrc(&[
            "solve",
            instance.to_str().unwrap(),
            "--algorithm",
            algorithm,
            "--output",
            solution.to_str().unwrap(),
        ]);
        assert_eq!(code(&solved), 0, "{algorithm}: {}", stderr(&solved));
        let verified = scsrc(&[
            "verify",
            solution.to_str().unwrap(),
            instance.to_str().unwrap(),
        ]);
        assert_eq!(code(&verified), 0, "{algorithm} output must verify");
    }
}

#[test]
fn verify_failure_names_the_first_uncovered_read() {
    let dir = tempfile::tempdir().unwrap();
    let superstring = write(dir.path(), "s.fasta", ">s\naaa\n");
    let instance = write(dir.path(), "i.fasta", ">g1\nggg\n");
    let out = scsrc(&["verify", &superstring, &instance]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("g1"));
}

#[test]
fn verify_accepts_reverse_complemented_coverage() {
    let dir = tempfile::tempdir().unwrap();
    // rc("tca") = "tga", which "atga" contains even though "tca" itself
    // does not occur forward.
    let superstring = write(dir.path(), "s.fasta", ">s\natga\n");
    let instance = write(dir.path(), "i.fasta", ">a\natg\n>b\ntca\n");
    let out = scsrc(&["verify", &superstring, &instance]);
    assert_eq!(code(&out), 0, "stdout: {} stderr: {}", stdout(&out), stderr(&out));
}

#[test]
fn verify_empty_superstring_covers_empty_instance() {
    let dir = tempfile::tempdir().unwrap();
    let superstring = write(dir.path(), "s.fasta", "");
    let instance = write(dir.path(), "i.fasta", "");
    let out = scsrc(&["verify", &superstring, &instance]);
    assert_eq!(code(&out), 0);
}

const CSV_HEADER: &str = "instance_id,m_raw,m_preprocessed,norm_S,opt,len_mgreedy,len_greedy,\
len_tgreedy,ratio_mgreedy,ratio_greedy,ratio_tgreedy,comp_mgreedy,comp_greedy,comp_tgreedy,\
cover_weight,norm_T,norm_A,ov_A,seed,wall_ms_total";

#[test]
fn eval_on_files_emits_the_fixed_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n>b\ntga\n");
    let two = write(dir.path(), "two.fasta", ">x\ngga\n>y\nttc\n");
    let out = scsrc(&["eval", &one, &two, "--exact"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], CSV_HEADER);
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first.len(), 20);
    assert_eq!(first[0], "one");
    assert_eq!(first[4], "4"); // exact optimum of {atg, tga}
    assert_eq!(first[18], "", "file-loaded instances carry no seed");
    assert_eq!(first[19], "0", "wall time is zeroed without --timings");
    assert_eq!(lines[2].split(',').next().unwrap(), "two");
}

#[test]
fn eval_audit_appends_nonnegative_slack_columns() {
    let out = scsrc(&[
        "eval",
        "--seed",
        "5",
        "--count",
        "3",
        "--genome-length",
        "10",
        "--reads",
        "4",
        "--read-length",
        "4",
        "--rc-prob",
        "0.25",
        "--exact",
        "--audit",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0].split(',').count(), 28);
    assert!(lines[0].ends_with(
        "slack_opt_t_additive,slack_opt_t_double,slack_norm_t_vs_norm_a,slack_opt_a_additive,\
         slack_ov_a_quarters,slack_norm_t_quarters,slack_tgreedy_eighths,slack_framework_halves"
    ));
    for line in &lines[1..] {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 28);
        for slack in &cells[20..] {
            assert!(
                slack.parse::<i64>().unwrap() >= 0,
                "audit slack must be nonnegative in {line}"
            );
        }
    }
}

#[test]
fn eval_oversized_exact_warns_and_leaves_opt_empty() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(dir.path(), "big.fasta", &eleven_reads());
    let out = scsrc(&["eval", &big, "--exact"]);
    assert_eq!(code(&out), 0, "oracle failures must not kill the campaign");
    let text = stdout(&out);
    let row: Vec<&str> = text.trim_end().lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[4], "", "opt must be empty when the oracle refuses");
    assert!(!row[5].is_empty(), "greedy lengths are still measured");
    assert!(stderr(&out).contains("warning: big:"));
}

#[test]
fn eval_restricted_to_greedy_leaves_other_columns_empty() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n>b\ntga\n");
    let out = scsrc(&["eval", &one, "--algorithm", "greedy"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.trim_end().lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[5], "", "mgreedy not requested");
    assert_eq!(row[6], "4", "greedy length");
    assert_eq!(row[7], "", "tgreedy not requested");
    assert_eq!(row[14], "", "no cycle stage without mgreedy/tgreedy");
    assert_eq!(row[15], "", "no retired set without mgreedy/tgreedy");
}

#[test]
fn eval_json_mirrors_csv_and_gates_trace() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n>b\ntga\n");
    let bare = scsrc(&["eval", &one, "--exact", "--format", "json"]);
    assert_eq!(code(&bare), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&bare)).unwrap();
    assert_eq!(doc["prng"], "chacha8");
    let row = &doc["rows"][0];
    assert_eq!(row["instance_id"], "one");
    assert_eq!(row["opt"], 4);
    assert_eq!(row["ratio_tgreedy"], "1.000000");
    assert_eq!(row["seed"], serde_json::Value::Null);
    assert!(row.get("trace").is_none(), "trace only appears with --trace");

    let traced = scsrc(&["eval", &one, "--format", "json", "--trace"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&traced)).unwrap();
    let trace = &doc["rows"][0]["trace"];
    assert!(trace["steps"].is_array());
    assert_eq!(trace["final_t"][0], "atga");
    assert_eq!(
        doc["rows"][0]["opt"],
        serde_json::Value::Null,
        "opt is filled only with --exact"
    );
}

#[test]
fn eval_flag_misuse_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n");
    assert_eq!(code(&scsrc(&["eval", &one, "--trace"])), 2);
    assert_eq!(code(&scsrc(&["eval"])), 2);
    assert_eq!(code(&scsrc(&["eval", &one, "--seed", "3"])), 2);
    assert_eq!(
        code(&scsrc(&["eval", "--seed", "3", "--genome-length", "10"])),
        2,
        "incomplete sweep flags"
    );
}

#[test]
fn usage_errors_from_the_parser_exit_2() {
    assert_eq!(code(&scsrc(&["solve"])), 2);
    assert_eq!(code(&scsrc(&["frobnicate"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n");
    assert_eq!(code(&scsrc(&["solve", &one, "--algorithm", "fastest"])), 2);
}

#[test]
fn eval_writes_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.fasta", ">a\natg\n>b\ntga\n");
    let report = dir.path().join("report.csv");
    let out = scsrc(&["eval", &one, "--exact", "--output", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.starts_with(CSV_HEADER));
}
