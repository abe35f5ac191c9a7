fn main() {
    majority::cli::main();
}
