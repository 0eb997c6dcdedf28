use std::io::Write;

fn main() {
    let outcome = reestype_cli::run(std::env::args().skip(1));
    let text = match (outcome.code, outcome.report["message"].as_str()) {
        // --help and --version
        (0, Some(msg)) => msg.to_string(),
        _ => outcome.to_json(),
    };
    // A closed pipe is not worth a panic.
    let _ = writeln!(std::io::stdout(), "{}", text.trim_end());
    std::process::exit(outcome.code);
}
