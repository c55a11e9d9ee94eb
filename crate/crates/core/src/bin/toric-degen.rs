fn main() {
    std::process::exit(toric_degen::cli::run(std::env::args_os()));
}
