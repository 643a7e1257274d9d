// This file is generated by `roslite msg gen`. Do not edit.

/// `asset_msgs/GetAssetRequest`
#[derive(Debug, Clone, PartialEq)]
pub struct GetAssetRequest {
    pub uri: ::std::string::String,
    pub want_raw: bool,
}

impl ::std::default::Default for GetAssetRequest {
    fn default() -> Self {
        GetAssetRequest {
            uri: ::std::default::Default::default(),
            want_raw: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for GetAssetRequest {
    const MIN_SIZE: usize = <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <bool as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.uri, out);
        ::roslite::wire::WireField::encode(&self.want_raw, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(GetAssetRequest {
            uri: ::roslite::wire::WireField::decode(r)?,
            want_raw: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.uri)
            + ::roslite::wire::WireField::encoded_len(&self.want_raw)
    }
}

impl ::roslite::wire::RosMessage for GetAssetRequest {
    const TYPE_NAME: &'static str = "asset_msgs/GetAssetRequest";
    const MD5SUM: &'static str = "622bbeed0fd93eff9c61402f5d835b01";
    const DEFINITION: &'static str = r#"# Resolve an asset uri (package:// or file://) on the machine holding the files.
string uri
bool want_raw # return the unparsed file bytes instead of a mesh
"#;
}

/// `asset_msgs/GetAssetResponse`
#[derive(Debug, Clone, PartialEq)]
pub struct GetAssetResponse {
    pub success: bool,
    pub message: ::std::string::String,
    pub format: ::std::string::String,
    pub checksum: ::std::string::String,
    pub mesh: super::super::asset_msgs::Mesh,
    pub raw: ::std::vec::Vec<u8>,
}

impl ::std::default::Default for GetAssetResponse {
    fn default() -> Self {
        GetAssetResponse {
            success: ::std::default::Default::default(),
            message: ::std::default::Default::default(),
            format: ::std::default::Default::default(),
            checksum: ::std::default::Default::default(),
            mesh: ::std::default::Default::default(),
            raw: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for GetAssetResponse {
    const MIN_SIZE: usize = <bool as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::asset_msgs::Mesh as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<u8> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.success, out);
        ::roslite::wire::WireField::encode(&self.message, out);
        ::roslite::wire::WireField::encode(&self.format, out);
        ::roslite::wire::WireField::encode(&self.checksum, out);
        ::roslite::wire::WireField::encode(&self.mesh, out);
        ::roslite::wire::WireField::encode(&self.raw, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(GetAssetResponse {
            success: ::roslite::wire::WireField::decode(r)?,
            message: ::roslite::wire::WireField::decode(r)?,
            format: ::roslite::wire::WireField::decode(r)?,
            checksum: ::roslite::wire::WireField::decode(r)?,
            mesh: ::roslite::wire::WireField::decode(r)?,
            raw: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.success)
            + ::roslite::wire::WireField::encoded_len(&self.message)
            + ::roslite::wire::WireField::encoded_len(&self.format)
            + ::roslite::wire::WireField::encoded_len(&self.checksum)
            + ::roslite::wire::WireField::encoded_len(&self.mesh)
            + ::roslite::wire::WireField::encoded_len(&self.raw)
    }
}

impl ::roslite::wire::RosMessage for GetAssetResponse {
    const TYPE_NAME: &'static str = "asset_msgs/GetAssetResponse";
    const MD5SUM: &'static str = "6e5526873fa84920e3a275dcd91f148f";
    const DEFINITION: &'static str = r#"bool success
string message
string format     # stl, obj, or the file extension when raw
string checksum   # md5 of the source file bytes
asset_msgs/Mesh mesh
uint8[] raw

================================================================================
MSG: asset_msgs/Mesh
# Triangle mesh after loader pre-processing.
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

/// `asset_msgs/GetAsset`
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GetAsset;

impl ::roslite::wire::RosService for GetAsset {
    type Request = GetAssetRequest;
    type Response = GetAssetResponse;
    const TYPE_NAME: &'static str = "asset_msgs/GetAsset";
    const MD5SUM: &'static str = "a785daf39ec55db44d4e23a6acfb4672";
}
