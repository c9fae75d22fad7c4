use std::io::Write;

fn main() {
    let out = halfder::cli::run_command(std::env::args().skip(1));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
