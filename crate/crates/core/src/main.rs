fn main() {
    std::process::exit(steinberg_lab::cli::run(std::env::args_os()));
}
