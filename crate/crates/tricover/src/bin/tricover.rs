fn main() {
    let out = tricover::cli::run(std::env::args_os());
    if !out.stdout.is_empty() {
        println!("{}", out.stdout);
    }
    std::process::exit(out.code);
}
