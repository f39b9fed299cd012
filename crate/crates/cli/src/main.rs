fn main() {
    std::process::exit(balloon_cli::run(std::env::args_os()));
}
