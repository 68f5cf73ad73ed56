fn main() {
    std::process::exit(monotone_recurrence::cli::run(std::env::args_os()));
}
