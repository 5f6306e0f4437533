fn main() {
    std::process::exit(spinorpow::cli::main_from_env());
}
