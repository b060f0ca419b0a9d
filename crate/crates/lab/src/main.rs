fn main() {
    std::process::exit(idbb_lab::cli::run(std::env::args_os()));
}
