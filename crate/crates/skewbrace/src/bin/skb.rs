use std::process::exit;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = skewbrace::cli::run_cli(&argv, &mut std::io::stdout(), &mut std::io::stderr());
    exit(code);
}
