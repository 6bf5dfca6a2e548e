fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let code = mhgr::cli::run(std::env::args_os(), &mut mhgr::cli::Io { out: &mut out, err: &mut err });
    std::process::exit(code);
}
