fn main() {
    std::process::exit(liefusion_cli::dispatch(std::env::args_os()));
}
