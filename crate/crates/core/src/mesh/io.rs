//! ASCII OBJ, OFF and PLY readers and writers.
//!
//! Writers emit LF line endings and shortest round-trip float formatting, so
//! `load(save(m))` reproduces positions exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use log::warn;

use super::{MeshError, TriangleMesh};
use crate::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Off,
    Ply,
}

impl MeshFormat {
    pub fn from_extension(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "obj" => Some(Self::Obj),
            "off" => Some(Self::Off),
            "ply" => Some(Self::Ply),
            _ => None,
        }
    }

    /// Guesses the format from file content.
    fn sniff(text: &str) -> Option<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))?;
        if first == "ply" {
            Some(Self::Ply)
        } else if first.starts_with("OFF") {
            Some(Self::Off)
        } else if first.starts_with("v ") || first.starts_with("f ") || first.starts_with("o ") {
            Some(Self::Obj)
        } else {
            None
        }
    }
}

impl std::str::FromStr for MeshFormat {
    type Err = MeshError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(Self::Obj),
            "off" => Ok(Self::Off),
            "ply" => Ok(Self::Ply),
            other => Err(MeshError::UnsupportedFormat(other.to_string())),
        }
    }
}

/// A mesh plus optional per-vertex attributes carried by PLY files.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshData {
    pub mesh: TriangleMesh,
    pub scalars: Option<Vec<f64>>,
    pub colors: Option<Vec<[u8; 3]>>,
}

impl MeshData {
    pub fn new(mesh: TriangleMesh) -> Self {
        Self {
            mesh,
            scalars: None,
            colors: None,
        }
    }
}

pub fn load_mesh(
    path: impl AsRef<Path>,
    format: Option<MeshFormat>,
) -> Result<TriangleMesh, MeshError> {
    load_mesh_data(path, format).map(|d| d.mesh)
}

pub fn load_mesh_data(
    path: impl AsRef<Path>,
    format: Option<MeshFormat>,
) -> Result<MeshData, MeshError> {
    let path = path.as_ref();
    let bytes = fs::read(path)?;
    if bytes.starts_with(b"ply") {
        let header_end = bytes.windows(10).position(|w| w == b"end_header");
        let header = &bytes[..header_end.unwrap_or(bytes.len().min(4096))];
        if !header.windows(12).any(|w| w == b"format ascii") {
            return Err(MeshError::UnsupportedFormat(
                "binary PLY is not supported".into(),
            ));
        }
    }
    let text = String::from_utf8(bytes)
        .map_err(|_| MeshError::UnsupportedFormat("file is not ASCII text".into()))?;
    let format = match format.or_else(|| MeshFormat::from_extension(path)) {
        Some(f) => f,
        None => MeshFormat::sniff(&text).ok_or_else(|| {
            MeshError::UnsupportedFormat(format!("cannot determine format of {}", path.display()))
        })?,
    };
    parse_mesh(&text, format)
}

pub fn parse_mesh(text: &str, format: MeshFormat) -> Result<MeshData, MeshError> {
    match format {
        MeshFormat::Obj => parse_obj(text).map(MeshData::new),
        MeshFormat::Off => parse_off(text).map(MeshData::new),
        MeshFormat::Ply => parse_ply(text),
    }
}

pub fn save_mesh(
    mesh: &TriangleMesh,
    path: impl AsRef<Path>,
    format: Option<MeshFormat>,
) -> Result<(), MeshError> {
    save_mesh_data(mesh, path, format, None, None)
}

/// Writes a mesh; scalars and colors are only representable in PLY.
pub fn save_mesh_data(
    mesh: &TriangleMesh,
    path: impl AsRef<Path>,
    format: Option<MeshFormat>,
    scalars: Option<&[f64]>,
    colors: Option<&[[u8; 3]]>,
) -> Result<(), MeshError> {
    let path = path.as_ref();
    let format = format
        .or_else(|| MeshFormat::from_extension(path))
        .ok_or_else(|| {
            MeshError::UnsupportedFormat(format!("cannot infer format from {}", path.display()))
        })?;
    let text = write_mesh(mesh, format, scalars, colors)?;
    fs::write(path, text)?;
    Ok(())
}

pub fn write_mesh(
    mesh: &TriangleMesh,
    format: MeshFormat,
    scalars: Option<&[f64]>,
    colors: Option<&[[u8; 3]]>,
) -> Result<String, MeshError> {
    let n = mesh.vertex_count();
    for len in [scalars.map(<[f64]>::len), colors.map(<[[u8; 3]]>::len)]
        .into_iter()
        .flatten()
    {
        if len != n {
            return Err(MeshError::AttributeLength {
                expected: n,
                got: len,
            });
        }
    }
    if format != MeshFormat::Ply && (scalars.is_some() || colors.is_some()) {
        return Err(MeshError::FormatCapability(
            "per-vertex scalars and colors can only be written to PLY".into(),
        ));
    }

    let mut out = String::with_capacity(n * 48 + mesh.face_count() * 24);
    match format {
        MeshFormat::Obj => {
            for v in mesh.vertices() {
                let _ = writeln!(out, "v {} {} {}", v.x, v.y, v.z);
            }
            for f in mesh.faces() {
                let _ = writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
            }
        }
        MeshFormat::Off => {
            let _ = writeln!(out, "OFF\n{} {} 0", n, mesh.face_count());
            for v in mesh.vertices() {
                let _ = writeln!(out, "{} {} {}", v.x, v.y, v.z);
            }
            for f in mesh.faces() {
                let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
            }
        }
        MeshFormat::Ply => {
            out.push_str("ply\nformat ascii 1.0\n");
            let _ = writeln!(out, "element vertex {n}");
            out.push_str("property double x\nproperty double y\nproperty double z\n");
            if scalars.is_some() {
                out.push_str("property double quality\n");
            }
            if colors.is_some() {
                out.push_str("property uchar red\nproperty uchar green\nproperty uchar blue\n");
            }
            let _ = writeln!(out, "element face {}", mesh.face_count());
            out.push_str("property list uchar int vertex_indices\nend_header\n");
            for (i, v) in mesh.vertices().iter().enumerate() {
                let _ = write!(out, "{} {} {}", v.x, v.y, v.z);
                if let Some(s) = scalars {
                    let _ = write!(out, " {}", s[i]);
                }
                if let Some(c) = colors {
                    let _ = write!(out, " {} {} {}", c[i][0], c[i][1], c[i][2]);
                }
                out.push('\n');
            }
            for f in mesh.faces() {
                let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
            }
        }
    }
    Ok(out)
}

fn parse_err(line: usize, message: impl Into<String>) -> MeshError {
    MeshError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_f64(token: Option<&str>, line: usize) -> Result<f64, MeshError> {
    let token = token.ok_or_else(|| parse_err(line, "missing coordinate"))?;
    token
        .parse::<f64>()
        .map_err(|_| parse_err(line, format!("invalid number `{token}`")))
}

/// Splits a polygon into triangles `(p0, p_k, p_k+1)`.
fn fan_triangulate(polygon: &[usize], out: &mut Vec<[usize; 3]>) {
    for k in 1..polygon.len() - 1 {
        out.push([polygon[0], polygon[k], polygon[k + 1]]);
    }
}

/// Drops topologically degenerate faces, then validates.
fn finish(
    vertices: Vec<Vec3>,
    faces: Vec<[usize; 3]>,
    polygons: usize,
) -> Result<TriangleMesh, MeshError> {
    if polygons > 0 {
        warn!("fan-triangulated {polygons} non-triangular faces");
    }
    let count = vertices.len();
    for (f, face) in faces.iter().enumerate() {
        if let Some(&index) = face.iter().find(|&&i| i >= count) {
            return Err(MeshError::Index {
                face: f,
                index: index as i64,
                count,
            });
        }
    }
    let before = faces.len();
    let faces: Vec<[usize; 3]> = faces
        .into_iter()
        .filter(|f| f[0] != f[1] && f[1] != f[2] && f[0] != f[2])
        .collect();
    if faces.len() < before {
        warn!(
            "dropped {} faces with repeated vertex indices",
            before - faces.len()
        );
    }
    TriangleMesh::new(vertices, faces)
}

fn parse_obj(text: &str) -> Result<TriangleMesh, MeshError> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    let mut polygons = 0;
    let mut polygon = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let x = parse_f64(tokens.next(), line_no)?;
                let y = parse_f64(tokens.next(), line_no)?;
                let z = parse_f64(tokens.next(), line_no)?;
                vertices.push(Vec3::new(x, y, z));
            }
            Some("f") => {
                polygon.clear();
                for token in tokens {
                    let index_str = token.split('/').next().unwrap_or("");
                    let index: i64 = index_str
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("invalid face index `{token}`")))?;
                    let resolved = match index {
                        0 => return Err(parse_err(line_no, "face index 0 is invalid in OBJ")),
                        i if i > 0 => i - 1,
                        i => vertices.len() as i64 + i,
                    };
                    if resolved < 0 || resolved as usize >= vertices.len() {
                        return Err(MeshError::Index {
                            face: faces.len(),
                            index,
                            count: vertices.len(),
                        });
                    }
                    polygon.push(resolved as usize);
                }
                if polygon.len() < 3 {
                    return Err(parse_err(line_no, "face needs at least 3 vertices"));
                }
                if polygon.len() > 3 {
                    polygons += 1;
                }
                fan_triangulate(&polygon, &mut faces);
            }
            _ => {}
        }
    }
    finish(vertices, faces, polygons)
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_off(text: &str) -> Result<TriangleMesh, MeshError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    if !header.starts_with("OFF") {
        return Err(parse_err(line_no, "missing OFF header"));
    }
    let rest = header[3..].trim();
    let (count_line, counts) = if rest.is_empty() {
        lines
            .next()
            .ok_or_else(|| parse_err(line_no, "missing element counts"))?
    } else {
        (line_no, rest)
    };
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(count_line, "invalid count"))
        })
        .collect::<Result<_, _>>()?;
    if counts.len() < 2 {
        return Err(parse_err(count_line, "expected vertex and face counts"));
    }
    let (nv, nf) = (counts[0], counts[1]);

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(count_line, "unexpected end of vertex list"))?;
        let mut t = line.split_whitespace();
        vertices.push(Vec3::new(
            parse_f64(t.next(), ln)?,
            parse_f64(t.next(), ln)?,
            parse_f64(t.next(), ln)?,
        ));
    }
    let mut faces = Vec::with_capacity(nf);
    let mut polygons = 0;
    for f in 0..nf {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(count_line, "unexpected end of face list"))?;
        let polygon = parse_index_list(line, ln, f, vertices.len())?;
        if polygon.len() > 3 {
            polygons += 1;
        }
        fan_triangulate(&polygon, &mut faces);
    }
    finish(vertices, faces, polygons)
}

/// Parses `n i0 i1 ... i(n-1)` with 0-based indices; trailing tokens are ignored.
fn parse_index_list(
    line: &str,
    line_no: usize,
    face: usize,
    count: usize,
) -> Result<Vec<usize>, MeshError> {
    let mut t = line.split_whitespace();
    let k: usize = t
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(line_no, "invalid face vertex count"))?;
    if k < 3 {
        return Err(parse_err(line_no, "face needs at least 3 vertices"));
    }
    (0..k)
        .map(|_| {
            let token = t
                .next()
                .ok_or_else(|| parse_err(line_no, "missing face index"))?;
            let index: i64 = token
                .parse()
                .map_err(|_| parse_err(line_no, format!("invalid face index `{token}`")))?;
            if index < 0 || index as usize >= count {
                return Err(MeshError::Index { face, index, count });
            }
            Ok(index as usize)
        })
        .collect()
}

struct PlyElement {
    name: String,
    count: usize,
    properties: Vec<PlyProperty>,
}

enum PlyProperty {
    Scalar(String),
    List(String),
}

impl PlyProperty {
    fn name(&self) -> &str {
        match self {
            Self::Scalar(n) | Self::List(n) => n,
        }
    }
}

fn parse_ply(text: &str) -> Result<MeshData, MeshError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut elements: Vec<PlyElement> = Vec::new();
    let mut saw_format = false;
    match lines.next() {
        Some((_, "ply")) => {}
        Some((ln, _)) => return Err(parse_err(ln, "missing `ply` magic")),
        None => return Err(parse_err(1, "empty file")),
    }
    let mut header_done = false;
    for (ln, line) in lines.by_ref() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["format", "ascii", ..] => saw_format = true,
            ["format", other, ..] => {
                return Err(MeshError::UnsupportedFormat(format!(
                    "PLY format `{other}`"
                )))
            }
            ["comment", ..] | ["obj_info", ..] | [] => {}
            ["element", name, count] => elements.push(PlyElement {
                name: name.to_string(),
                count: count
                    .parse()
                    .map_err(|_| parse_err(ln, "invalid element count"))?,
                properties: Vec::new(),
            }),
            ["property", "list", _, _, name] => elements
                .last_mut()
                .ok_or_else(|| parse_err(ln, "property before element"))?
                .properties
                .push(PlyProperty::List(name.to_string())),
            ["property", _, name] => elements
                .last_mut()
                .ok_or_else(|| parse_err(ln, "property before element"))?
                .properties
                .push(PlyProperty::Scalar(name.to_string())),
            ["end_header"] => {
                header_done = true;
                break;
            }
            _ => return Err(parse_err(ln, format!("unrecognized header line `{line}`"))),
        }
    }
    if !header_done {
        return Err(parse_err(1, "missing end_header"));
    }
    if !saw_format {
        return Err(parse_err(1, "missing format line"));
    }

    let mut body = lines.filter(|(_, l)| !l.is_empty());
    let mut vertices = Vec::new();
    let mut scalars: Option<Vec<f64>> = None;
    let mut colors: Option<Vec<[u8; 3]>> = None;
    let mut faces = Vec::new();
    let mut polygons = 0;
    let mut vertex_count = 0;
    for element in &elements {
        let position = |name: &str| element.properties.iter().position(|p| p.name() == name);
        match element.name.as_str() {
            "vertex" => {
                if element
                    .properties
                    .iter()
                    .any(|p| matches!(p, PlyProperty::List(_)))
                {
                    return Err(MeshError::UnsupportedFormat(
                        "list properties on vertices".into(),
                    ));
                }
                let (x, y, z) = match (position("x"), position("y"), position("z")) {
                    (Some(x), Some(y), Some(z)) => (x, y, z),
                    _ => return Err(parse_err(1, "vertex element lacks x/y/z")),
                };
                let quality = position("quality");
                let rgb = match (position("red"), position("green"), position("blue")) {
                    (Some(r), Some(g), Some(b)) => Some([r, g, b]),
                    _ => None,
                };
                vertex_count = element.count;
                vertices.reserve(element.count);
                if quality.is_some() {
                    scalars = Some(Vec::with_capacity(element.count));
                }
                if rgb.is_some() {
                    colors = Some(Vec::with_capacity(element.count));
                }
                for _ in 0..element.count {
                    let (ln, line) = body
                        .next()
                        .ok_or_else(|| parse_err(1, "unexpected end of vertex data"))?;
                    let values: Vec<f64> = line
                        .split_whitespace()
                        .map(|t| parse_f64(Some(t), ln))
                        .collect::<Result<_, _>>()?;
                    if values.len() < element.properties.len() {
                        return Err(parse_err(ln, "too few vertex properties"));
                    }
                    vertices.push(Vec3::new(values[x], values[y], values[z]));
                    if let (Some(q), Some(s)) = (quality, scalars.as_mut()) {
                        s.push(values[q]);
                    }
                    if let (Some([r, g, b]), Some(c)) = (rgb, colors.as_mut()) {
                        c.push([values[r] as u8, values[g] as u8, values[b] as u8]);
                    }
                }
            }
            "face" => {
                let list = element
                    .properties
                    .iter()
                    .position(|p| {
                        matches!(p, PlyProperty::List(n) if n == "vertex_indices" || n == "vertex_index")
                    })
                    .ok_or_else(|| parse_err(1, "face element lacks vertex_indices"))?;
                if list != 0 {
                    return Err(MeshError::UnsupportedFormat(
                        "face properties before vertex_indices".into(),
                    ));
                }
                for f in 0..element.count {
                    let (ln, line) = body
                        .next()
                        .ok_or_else(|| parse_err(1, "unexpected end of face data"))?;
                    let polygon = parse_index_list(line, ln, f, vertex_count)?;
                    if polygon.len() > 3 {
                        polygons += 1;
                    }
                    fan_triangulate(&polygon, &mut faces);
                }
            }
            _ => {
                for _ in 0..element.count {
                    body.next()
                        .ok_or_else(|| parse_err(1, "unexpected end of element data"))?;
                }
            }
        }
    }
    Ok(MeshData {
        mesh: finish(vertices, faces, polygons)?,
        scalars,
        colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRI_OBJ: &str = "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n";

    fn tri() -> TriangleMesh {
        TriangleMesh::new(
            vec![
                Vec3::zeros(),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap()
    }

    #[test]
    fn minimal_obj() {
        let m = parse_mesh(TRI_OBJ, MeshFormat::Obj).unwrap().mesh;
        assert_eq!(m, tri());
    }

    #[test]
    fn off_matches_obj() {
        let m = parse_mesh(
            "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n",
            MeshFormat::Off,
        )
        .unwrap()
        .mesh;
        assert_eq!(m, tri());
        let inline = parse_mesh("OFF 3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n", MeshFormat::Off)
            .unwrap()
            .mesh;
        assert_eq!(inline, tri());
    }

    #[test]
    fn quad_is_fan_triangulated() {
        let text = "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n";
        let m = parse_mesh(text, MeshFormat::Obj).unwrap().mesh;
        // Fan from the first corner: (p0, p_k, p_k+1) for k = 1..n-2.
        let polygon = [0usize, 1, 2, 3];
        let expected: Vec<[usize; 3]> = (1..polygon.len() - 1)
            .map(|k| [polygon[0], polygon[k], polygon[k + 1]])
            .collect();
        assert_eq!(m.faces(), expected.as_slice());
        assert_eq!(m.faces(), &[[0, 1, 2], [0, 2, 3]]);
    }

    #[test]
    fn obj_ignores_attributes_and_resolves_negative_indices() {
        let text = "# comment\no thing\nv 0 0 0\nvt 0 0\nvn 0 0 1\nv 1 0 0\nv 0 1 0\nf -3/1/1 -2/1/1 -1/1/1\n";
        let m = parse_mesh(text, MeshFormat::Obj).unwrap().mesh;
        assert_eq!(m, tri());
    }

    #[test]
    fn obj_errors_carry_line_numbers() {
        let err = parse_mesh("v 0 0 0\nv 1 x 0\n", MeshFormat::Obj).unwrap_err();
        assert!(matches!(err, MeshError::Parse { line: 2, .. }));
        let err = parse_mesh("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 7\n", MeshFormat::Obj).unwrap_err();
        assert!(matches!(err, MeshError::Index { index: 7, .. }));
    }

    #[test]
    fn off_index_out_of_range() {
        let err = parse_mesh(
            "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 3\n",
            MeshFormat::Off,
        )
        .unwrap_err();
        assert!(matches!(err, MeshError::Index { index: 3, .. }));
    }

    #[test]
    fn ply_with_extra_elements_and_attributes() {
        let text = "ply\nformat ascii 1.0\ncomment hi\nelement vertex 3\nproperty float x\nproperty float y\nproperty float z\nproperty float quality\nproperty uchar red\nproperty uchar green\nproperty uchar blue\nelement face 1\nproperty list uchar int vertex_indices\nelement edge 1\nproperty int vertex1\nproperty int vertex2\nend_header\n0 0 0 0.5 255 0 0\n1 0 0 1.5 0 255 0\n0 1 0 2.5 0 0 255\n3 0 1 2\n0 1\n";
        let d = parse_mesh(text, MeshFormat::Ply).unwrap();
        assert_eq!(d.mesh, tri());
        assert_eq!(d.scalars.unwrap(), vec![0.5, 1.5, 2.5]);
        assert_eq!(d.colors.unwrap()[1], [0, 255, 0]);
    }

    #[test]
    fn binary_ply_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.ply");
        fs::write(
            &path,
            b"ply\nformat binary_little_endian 1.0\nelement vertex 0\nend_header\n",
        )
        .unwrap();
        assert!(matches!(
            load_mesh(&path, None),
            Err(MeshError::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn scalars_require_ply() {
        let s = [1.0, 2.0, 3.0];
        assert!(matches!(
            write_mesh(&tri(), MeshFormat::Obj, Some(&s), None),
            Err(MeshError::FormatCapability(_))
        ));
        assert!(matches!(
            write_mesh(&tri(), MeshFormat::Ply, Some(&s[..2]), None),
            Err(MeshError::AttributeLength { .. })
        ));
    }

    #[test]
    fn sniffing_without_extension() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mesh.dat");
        fs::write(&path, "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n").unwrap();
        assert_eq!(load_mesh(&path, None).unwrap(), tri());
        fs::write(&path, "hello\n").unwrap();
        assert!(matches!(
            load_mesh(&path, None),
            Err(MeshError::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn writers_use_lf_only() {
        for format in [MeshFormat::Obj, MeshFormat::Off, MeshFormat::Ply] {
            let text = write_mesh(&tri(), format, None, None).unwrap();
            assert!(!text.contains('\r'));
            assert!(text.ends_with('\n'));
        }
    }
}
