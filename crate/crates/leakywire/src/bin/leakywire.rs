fn main() {
    println!("leakywire");
}
