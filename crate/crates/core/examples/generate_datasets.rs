//! Seeded datasets with a known number of levels, and the text file format.
//!
//! `cargo run --example generate_datasets`

use ndsort::datagen::{generate, read_dataset, write_dataset, DatasetSpec};
use ndsort::{build_point_set, count_levels, sort_dc};

pub fn run_example() -> ndsort::Result<()> {
    for levels in [0, 1, 3, 10] {
        let spec = DatasetSpec::new(1000, 5, levels, 7);
        let points = generate(&spec)?;
        let found = count_levels(&sort_dc(&points));
        println!("{spec}: {found} levels");
        if levels > 0 {
            assert_eq!(found, levels);
        }
    }

    let spec = DatasetSpec::new(5, 3, 2, 99);
    let points = generate(&spec)?;
    let mut file = Vec::new();
    write_dataset(&mut file, &spec, &points)?;
    print!("{}", String::from_utf8_lossy(&file));

    let (read_spec, rows) = read_dataset(&file[..])?;
    assert_eq!(read_spec, spec);
    assert_eq!(sort_dc(&build_point_set(&rows)?), sort_dc(&points));
    Ok(())
}

fn main() -> ndsort::Result<()> {
    run_example()
}
