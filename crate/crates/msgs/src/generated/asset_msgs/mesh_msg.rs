// This file is generated by `roslite msg gen`. Do not edit.

/// `asset_msgs/Mesh`
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: ::std::vec::Vec<f32>,
    pub normals: ::std::vec::Vec<f32>,
    pub triangles: ::std::vec::Vec<u32>,
    pub diffuse_color: super::super::std_msgs::ColorRGBA,
}

impl ::std::default::Default for Mesh {
    fn default() -> Self {
        Mesh {
            vertices: ::std::default::Default::default(),
            normals: ::std::default::Default::default(),
            triangles: ::std::default::Default::default(),
            diffuse_color: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Mesh {
    const MIN_SIZE: usize = <::std::vec::Vec<f32> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f32> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<u32> as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::std_msgs::ColorRGBA as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.vertices, out);
        ::roslite::wire::WireField::encode(&self.normals, out);
        ::roslite::wire::WireField::encode(&self.triangles, out);
        ::roslite::wire::WireField::encode(&self.diffuse_color, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Mesh {
            vertices: ::roslite::wire::WireField::decode(r)?,
            normals: ::roslite::wire::WireField::decode(r)?,
            triangles: ::roslite::wire::WireField::decode(r)?,
            diffuse_color: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.vertices)
            + ::roslite::wire::WireField::encoded_len(&self.normals)
            + ::roslite::wire::WireField::encoded_len(&self.triangles)
            + ::roslite::wire::WireField::encoded_len(&self.diffuse_color)
    }
}

impl ::roslite::wire::RosMessage for Mesh {
    const TYPE_NAME: &'static str = "asset_msgs/Mesh";
    const MD5SUM: &'static str = "8c535fe8b6aa16979de040bab8f94ae0";
    const DEFINITION: &'static str = r#"# Triangle mesh after loader pre-processing.
# vertices and normals are packed xyz triples, triangles packed index triples.
float32[] vertices
float32[] normals
uint32[] triangles
std_msgs/ColorRGBA diffuse_color

================================================================================
MSG: std_msgs/ColorRGBA
float32 r
float32 g
float32 b
float32 a
"#;
}
