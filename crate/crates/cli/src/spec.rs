//! `--graph` argument forms.

use std::path::PathBuf;
use std::str::FromStr;

use randic_core::{
    graph6_decode, make_complete_bipartite_minus_edge, make_cycle, make_dutch_windmill,
    make_petersen, Catalog, Error, Graph, Result,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Windmill { m: usize, n: usize },
    BipartiteMinusEdge { m: usize, n: usize },
    Petersen,
    Catalog(String),
    Graph6(String),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let nums = || -> Result<Vec<usize>> {
            arg.split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad number {x:?} in {s:?}")))
                })
                .collect()
        };
        let spec = match kind {
            "cycle" => match nums()?.as_slice() {
                &[m] => GraphSpec::Cycle(m),
                _ => return Err(Error::InvalidParameter("cycle:<m>".into())),
            },
            "windmill" => match nums()?.as_slice() {
                &[m, n] => GraphSpec::Windmill { m, n },
                _ => return Err(Error::InvalidParameter("windmill:<m>,<n>".into())),
            },
            "kmn-e" => match nums()?.as_slice() {
                &[m, n] => GraphSpec::BipartiteMinusEdge { m, n },
                _ => return Err(Error::InvalidParameter("kmn-e:<m>,<n>".into())),
            },
            "petersen" if arg.is_empty() => GraphSpec::Petersen,
            "catalog" if !arg.is_empty() => GraphSpec::Catalog(arg.to_string()),
            "g6" if !arg.is_empty() => GraphSpec::Graph6(arg.to_string()),
            "file" if !arg.is_empty() => GraphSpec::File(PathBuf::from(arg)),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unrecognised graph {s:?}; expected cycle:M, windmill:M,N, kmn-e:M,N, \
                     petersen, catalog:G_i, g6:STRING or file:PATH"
                )))
            }
        };
        Ok(spec)
    }
}

impl GraphSpec {
    pub fn label(&self) -> String {
        match self {
            GraphSpec::Cycle(m) => format!("C_{m}"),
            GraphSpec::Windmill { m, n } => format!("D_{m}^{n}"),
            GraphSpec::BipartiteMinusEdge { m, n } => format!("K_{m},{n}-e"),
            GraphSpec::Petersen => "P".into(),
            GraphSpec::Catalog(name) => name.clone(),
            GraphSpec::Graph6(s) => format!("g6:{s}"),
            GraphSpec::File(p) => p.display().to_string(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Cycle(m) => make_cycle(*m),
            GraphSpec::Windmill { m, n } => make_dutch_windmill(*m, *n),
            GraphSpec::BipartiteMinusEdge { m, n } => make_complete_bipartite_minus_edge(*m, *n),
            GraphSpec::Petersen => Ok(make_petersen()),
            GraphSpec::Catalog(name) => catalog_graph(name),
            GraphSpec::Graph6(s) => graph6_decode(s),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                let line = text
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .ok_or_else(|| Error::Parse(format!("{} has no graph6 line", path.display())))?;
                graph6_decode(line.trim())
            }
        }
    }
}

pub fn catalog_graph(name: &str) -> Result<Graph> {
    let catalog = Catalog::embedded()?;
    catalog
        .get(name)
        .map(|e| e.graph.clone())
        .ok_or_else(|| Error::InvalidParameter(format!("no catalog entry named {name:?} (G_1 .. G_21)")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("cycle:5".parse::<GraphSpec>().unwrap(), GraphSpec::Cycle(5));
        assert_eq!("windmill:5,3".parse::<GraphSpec>().unwrap(), GraphSpec::Windmill { m: 5, n: 3 });
        assert_eq!(
            "kmn-e:3,4".parse::<GraphSpec>().unwrap(),
            GraphSpec::BipartiteMinusEdge { m: 3, n: 4 }
        );
        assert_eq!("petersen".parse::<GraphSpec>().unwrap(), GraphSpec::Petersen);
        assert_eq!("catalog:G_12".parse::<GraphSpec>().unwrap(), GraphSpec::Catalog("G_12".into()));
        assert_eq!("g6:Bw".parse::<GraphSpec>().unwrap(), GraphSpec::Graph6("Bw".into()));
        for bad in ["cycle", "cycle:x", "windmill:5", "star:3", "catalog:", "petersen:1"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn builds() {
        assert_eq!(GraphSpec::Graph6("Bw".into()).build().unwrap(), make_cycle(3).unwrap());
        assert_eq!(GraphSpec::Catalog("G_17".into()).build().unwrap().size(), 15);
        assert!(GraphSpec::Catalog("G_22".into()).build().is_err());
        assert!(GraphSpec::Cycle(2).build().is_err());
    }
}
