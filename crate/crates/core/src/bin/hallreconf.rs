fn main() {
    let (code, text) = hallreconf::cli::run(std::env::args_os());
    if code == 0 || code == 2 {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    std::process::exit(code);
}
