fn main() {
    std::process::exit(necsig_cli::run(std::env::args_os()));
}
