//! Light subgraphs guaranteed in every 1-planar graph of minimum degree 7.

use super::{DegreeInterval, TypedPattern};

fn exactly(k: usize) -> DegreeInterval {
    DegreeInterval::exactly(k)
}

fn at_most(k: usize) -> DegreeInterval {
    DegreeInterval::at_most(k)
}

pub fn catalog() -> Vec<TypedPattern> {
    let build = |name, vertices: &[&str], edges: &[(usize, usize)], bounds: &[DegreeInterval]| {
        TypedPattern::new(name, vertices, edges, bounds).expect("catalog pattern is well formed")
    };
    let star_leaves: Vec<(usize, usize)> = (1..=7).map(|l| (0, l)).collect();
    let mut star_bounds = vec![exactly(7)];
    star_bounds.extend([at_most(23); 7]);

    vec![
        // edge of type (7, 7)
        build("edge_77", &["u", "v"], &[(0, 1)], &[exactly(7), exactly(7)]),
        // K4 of type (7, 8-, 8-, 10-)
        build(
            "k4_typed",
            &["a", "b", "c", "d"],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            &[exactly(7), at_most(8), at_most(8), at_most(10)],
        ),
        // K_{1,7}: center of degree 7, leaves of degree at most 23
        build(
            "star_k17",
            &["c", "l1", "l2", "l3", "l4", "l5", "l6", "l7"],
            &star_leaves,
            &star_bounds,
        ),
        // triangle of type (7, 7, 9-)
        build(
            "triangle_779",
            &["a", "b", "c"],
            &[(0, 1), (1, 2), (0, 2)],
            &[exactly(7), exactly(7), at_most(9)],
        ),
        // 4-cycle x1 x2 x3 x4 of type (7, 9-, 7, 9-) with chord x1x3
        build(
            "chorded_c4",
            &["x1", "x2", "x3", "x4"],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
            &[exactly(7), at_most(9), exactly(7), at_most(9)],
        ),
        // K1 joined to K1 ∪ K2, every vertex of degree at most 9
        build(
            "paw_9max",
            &["j", "p", "t1", "t2"],
            &[(0, 1), (0, 2), (0, 3), (2, 3)],
            &[at_most(9); 4],
        ),
    ]
}

pub fn catalog_pattern(name: &str) -> Option<TypedPattern> {
    catalog().into_iter().find(|p| p.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_entries_with_expected_shapes() {
        let cat = catalog();
        let names: Vec<&str> = cat.iter().map(TypedPattern::name).collect();
        assert_eq!(names, ["edge_77", "k4_typed", "star_k17", "triangle_779", "chorded_c4", "paw_9max"]);
        let edges: Vec<usize> = cat.iter().map(|p| p.edges().len()).collect();
        assert_eq!(edges, [1, 6, 7, 3, 5, 4]);
        let k4 = catalog_pattern("k4_typed").unwrap();
        assert_eq!(k4.bounds(), &[exactly(7), at_most(8), at_most(8), at_most(10)]);
        let c4 = catalog_pattern("chorded_c4").unwrap();
        assert_eq!(c4.bounds()[0], exactly(7));
        assert_eq!(c4.bounds()[2], exactly(7));
        assert!(catalog_pattern("nope").is_none());
    }
}
