fn main() {
    std::process::exit(bbw_ulrich_cli::run(std::env::args_os()));
}
