//! Vertex and edge connectivity of a few small graphs, with separators and
//! cuts, checked against brute force.
//!
//! ```text
//! cargo run --example graph_connectivity
//! ```

use blt::graph::{
    edge_connectivity, edge_connectivity_brute, min_degree, parse_graph, vertex_connectivity,
    vertex_connectivity_brute, Graph,
};

fn main() -> blt::Result<()> {
    let bowtie = parse_graph(
        "# two triangles sharing vertex 3
         5 6
         1 2
         1 3
         2 3
         3 4
         3 5
         4 5",
    )?;
    let graphs = [
        ("P_4", Graph::path(4)),
        ("C_5", Graph::cycle(5)),
        ("K_4", Graph::complete(4)),
        ("K_1,3", Graph::star(3)),
        ("bowtie", bowtie),
    ];

    for (name, g) in &graphs {
        let vc = vertex_connectivity(g);
        let ec = edge_connectivity(g);
        assert_eq!(vc.kappa, vertex_connectivity_brute(g).kappa);
        assert_eq!(ec.lambda, edge_connectivity_brute(g).lambda);

        let sep = match &vc.separator {
            Some(s) => format!("{:?}", s.iter().map(|v| v + 1).collect::<Vec<_>>()),
            None => "complete".to_string(),
        };
        let cut: Vec<_> = ec.cut.iter().map(|(a, b)| (a + 1, b + 1)).collect();
        println!(
            "{name:7} kappa={} lambda={} delta={}  separator={sep} cut={cut:?}",
            vc.kappa,
            ec.lambda,
            min_degree(g)
        );
    }
    Ok(())
}
