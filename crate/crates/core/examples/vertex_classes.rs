//! Enumerate the symmetry classes of the relabelled puzzle and print their counts.

use cosetcube::coords::{VertexTable, R_SIZE};

fn main() {
    let v = VertexTable::get();
    println!("flipslice classes  {}", v.flipslice_classes());
    println!("vertices           {}", v.count());
    println!("solvable vertices  {}", v.solvable_count());
    let mut total = 0u64;
    v.for_each(0..v.count(), |_, c| total += v.class_size(c) as u64);
    println!("sum of class sizes {total} (|R| = {R_SIZE})");
}
