fn main() {
    std::process::exit(somno::cli::run(std::env::args_os()));
}
