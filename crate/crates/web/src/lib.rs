//! Browser bindings: each export takes plain numbers or a matrix literal and
//! returns a JSON string, with failures as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use vcubic::cremona::{cremona_gram_image, MarkedGram};
use vcubic::fm::fm_count;
use vcubic::lattice::parse_gram;
use vcubic::moduli::{identify_components, image_of, labelling_form, veronese_frame};
use vcubic::Result;

/// Largest discriminant the explorer lists for an image lattice.
pub const IDENTIFY_MAX: i64 = 100;

fn render(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

pub fn component_value(d1: i64, d2: i64, tau: i64) -> Result<Value> {
    let data = image_of(d1, d2, tau)?;
    let components = identify_components(data.image.gram(), 20, IDENTIFY_MAX)?;
    Ok(json!({ "component": data, "image_components": components }))
}

pub fn cremona_value(gram: &str, reframe: bool) -> Result<Value> {
    let source = if reframe {
        veronese_frame(&parse_gram(gram)?)?
    } else {
        MarkedGram::parse(gram)?
    };
    let image = cremona_gram_image(&source);
    Ok(json!({
        "source": source,
        "image": image,
        "labelling_form": labelling_form(image.gram())?,
    }))
}

pub fn fm_value(d: i64) -> Result<Value> {
    Ok(serde_json::to_value(fm_count(d)?).expect("report serializes"))
}

/// Gram matrix, frame and Cremona image of the component `(d1, d2, τ)`.
#[wasm_bindgen]
pub fn component(d1: i32, d2: i32, tau: i32) -> String {
    render(component_value(d1.into(), d2.into(), tau.into()))
}

/// Image of a marked Gram matrix `(h², v, s)`; `reframe` first moves an
/// arbitrary lattice with `h²` first into a Veronese frame.
#[wasm_bindgen]
pub fn cremona(gram: &str, reframe: bool) -> String {
    render(cremona_value(gram, reframe))
}

#[wasm_bindgen]
pub fn fm_partners(d: i32) -> String {
    render(fm_value(d.into()))
}
