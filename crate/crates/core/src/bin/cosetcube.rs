fn main() {
    std::process::exit(cosetcube::cli::run(std::env::args_os()));
}
