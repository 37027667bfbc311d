fn main() {
    std::process::exit(bohr::cli::run());
}
