fn main() {
    std::process::exit(nsg::cli::run(std::env::args_os()));
}
