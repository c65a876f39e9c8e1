//! Regenerates the golden model corpus under models/ from the fixture
//! builders, so the JSON files and the in-crate fixtures cannot drift.

use contactgeo::fixtures;
use contactgeo::ContactModel;
use holonomy_lab::modelfile::ModelFile;

fn doc_of(model: &ContactModel) -> ModelFile {
    let n = model.n;
    let d = model.dim_frame();
    ModelFile {
        schema: "holonomy-lab/1".into(),
        name: model.name.clone(),
        dimension: n,
        m: model.m,
        variables: (1..=n).map(|i| format!("x{i}")).collect(),
        theta: model.theta.comps.iter().map(|c| c.to_string()).collect(),
        frame: model
            .frame
            .iter()
            .map(|f| f.comps.iter().map(|c| c.to_string()).collect())
            .collect(),
        metric: (0..d)
            .map(|i| (i..d).map(|j| model.g.at(i, j).to_string()).collect())
            .collect(),
        j: model.j.as_ref().map(|jm| {
            (0..d)
                .map(|i| (0..d).map(|j| jm.at(i, j).to_string()).collect())
                .collect()
        }),
        base_point: model.base_point.iter().map(|r| r.to_string()).collect(),
        expect: None,
    }
}

fn main() {
    let corpus = fixtures::golden_corpus().unwrap();
    std::fs::create_dir_all("models").unwrap();
    for model in &corpus {
        let doc = doc_of(model);
        let path = format!("models/{}.json", model.name);
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap() + "\n").unwrap();
        println!("wrote {path}");
    }
}
