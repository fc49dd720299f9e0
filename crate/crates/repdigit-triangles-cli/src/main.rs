use std::process;

fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = repdigit_triangles_cli::run(std::env::args_os(), &mut out);
    process::exit(code);
}
