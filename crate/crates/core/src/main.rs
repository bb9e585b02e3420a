fn main() { std::process::exit(spse::cli::main()) }
