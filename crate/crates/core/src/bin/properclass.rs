fn main() {
    std::process::exit(properclass::cli::cli_main(std::env::args_os()));
}
