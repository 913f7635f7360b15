use std::io;

fn main() {
    // Rust ignores SIGPIPE, turning a closed downstream (`... | head`) into
    // write errors. Restore the default so the process exits silently like
    // any other filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let mut stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr();
    let code = soltes::cli::run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr);
    std::process::exit(code);
}
