mod common;

use depiction::checker::PlanarDiagram;
use depiction::generators::{
    gen_correct_diagram, gen_degenerate_diagram, gen_incorrect_diagram, DegenerateKind, GenConfig,
    Seed,
};
use depiction::svg::render_svg;

fn check_well_formed(d: &PlanarDiagram) -> String {
    let svg = render_svg(d);
    let doc = roxmltree::Document::parse(&svg).unwrap_or_else(|e| panic!("{e}\n{svg}"));
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    for n in doc.descendants().filter(|n| n.is_element()) {
        for a in n.attributes() {
            assert!(
                !a.value().contains("NaN") && !a.value().contains("inf"),
                "{svg}"
            );
        }
    }
    svg
}

#[test]
fn generated_diagrams_render_as_svg() {
    let cfg = GenConfig::default();
    for i in 0..150 {
        let s = Seed(21).nth(i);
        check_well_formed(&gen_correct_diagram(s, &cfg).unwrap().1);
        check_well_formed(&gen_incorrect_diagram(s, &cfg).unwrap());
    }
    for i in 0..20 {
        for kind in [DegenerateKind::Triangle, DegenerateKind::Vertex] {
            check_well_formed(&gen_degenerate_diagram(Seed(4).nth(i), &cfg, kind).unwrap());
        }
    }
}

#[test]
fn dilation_figure_layers() {
    let svg = check_well_formed(&common::diagram("dilation.json"));
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let ids: Vec<&str> = doc
        .root_element()
        .children()
        .filter_map(|n| n.attribute("id"))
        .collect();
    assert_eq!(
        ids,
        [
            "quad1-sides",
            "quad2-sides",
            "rays",
            "diagonal-triangles",
            "axis",
            "points",
            "ideal-points"
        ]
    );
    let count = |class: &str| {
        doc.descendants()
            .filter(|n| n.attribute("class") == Some(class))
            .count()
    };
    assert_eq!(count("vertex"), 8);
    assert_eq!(count("center"), 1);
    assert_eq!(count("ideal-arrow"), 2);
}

#[test]
fn incorrect_figure_has_no_axis_layer() {
    let svg = render_svg(&common::diagram("perturbed.json"));
    assert!(!svg.contains("id=\"axis\""));
}
