fn main() {
    std::process::exit(apery_cong::cli::run_cli(std::env::args_os()));
}
