//! Watch the residue table evolve while scanning a sequence.
//!
//! The fast verifier keeps one counter per residue class modulo the
//! minimal excludant. A finite entry `p` in class `j` means every value
//! `p + t*mex` is forbidden: missing already, or proof of refinability if
//! it ever appears as a part. Saturation (all entries finite and within
//! the current length) means no further part can ever be appended.
//!
//! Run with `cargo run --example forbidden_value_table`.

use unrefinable::{ResidueTable, StarSequence};

fn show(table: &ResidueTable) -> String {
    let cells: Vec<String> = table
        .entries()
        .iter()
        .map(|e| e.map_or("-".to_string(), |p| p.to_string()))
        .collect();
    format!("({})", cells.join(", "))
}

fn main() {
    let seq: StarSequence = "1 2 3 4 5 * 7 8 * * 11 12 13 *".parse().unwrap();
    let mex = seq.mex();
    println!("sequence: {seq}");
    println!("minimal excludant: {mex}\n");

    let mut table = ResidueTable::new(mex);
    for index in (mex + 1)..=seq.len() {
        if seq.is_missing(index) {
            table.update(index as u64);
            println!("missing {index:2} -> table {}", show(&table));
        } else if table.forbids(index) {
            println!("part    {index:2} -> forbidden, sequence is refinable");
            return;
        }
    }
    println!("\nscan done, sequence is unrefinable so far");
    println!(
        "saturated at length {}: {}",
        seq.len(),
        table.is_saturated(seq.len())
    );
    // 15 = 3 (mod 6) and the class-3 entry is 9, so a part 15 would refine.
    println!("can 15 be appended as a part? {}", !table.forbids(15));
}
