fn main() {
    std::process::exit(dioph_lab::cli::run(std::env::args_os()));
}
