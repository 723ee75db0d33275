#![allow(dead_code)]

use std::path::PathBuf;

use depiction::checker::PlanarDiagram;
use depiction::io::parse_diagram;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn diagram(name: &str) -> PlanarDiagram {
    parse_diagram(&data(name)).unwrap()
}
