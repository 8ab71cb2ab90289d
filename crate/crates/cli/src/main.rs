use std::io::Write;

fn main() {
    let (code, out) = formata_cli::run_command(std::env::args_os());
    let mut stream: Box<dyn Write> = if code == formata_cli::EXIT_USAGE {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = stream.write_all(out.as_bytes());
    let _ = stream.flush();
    std::process::exit(code);
}
