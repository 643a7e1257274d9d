use rand::SeedableRng;
use roslite::msg::SchemaRegistry;
use roslite::wire::sample::{random_value, SampleLimits};
use roslite::wire::{self, MessageLayout, RosMessage, RosService};

/// Dynamic bytes -> generated decode -> generated encode must reproduce the
/// same bytes, for random values of the given type.
fn check_equivalence<M: RosMessage + Default + std::fmt::Debug + PartialEq>(reg: &SchemaRegistry, rounds: usize) {
    let layout = MessageLayout::resolve(reg, M::TYPE_NAME).unwrap();
    let spec = reg.get(M::TYPE_NAME).unwrap();
    assert_eq!(M::MD5SUM, roslite::msg::compute_md5(&spec, reg).unwrap(), "{}", M::TYPE_NAME);
    assert_eq!(M::DEFINITION, roslite::msg::dependency_text(&spec, reg).unwrap());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..rounds {
        let value = random_value(&layout, &mut rng, SampleLimits::default());
        let dynamic = wire::serialize(&layout, &value).unwrap();
        let typed = M::from_bytes(&dynamic).unwrap_or_else(|e| panic!("{}: {e}", M::TYPE_NAME));
        assert_eq!(typed.to_bytes(), dynamic, "{}", M::TYPE_NAME);
        assert_eq!(typed.encoded_len(), dynamic.len());
        assert_eq!(wire::deserialize(&layout, &typed.to_bytes()).unwrap(), value);
    }
    let zero = M::default().to_bytes();
    assert_eq!(zero, wire::serialize(&layout, &layout.default_value()).unwrap(), "{} default", M::TYPE_NAME);
}

use roslite_msgs::*;

macro_rules! equivalence {
    ($reg:expr, $($ty:ty),* $(,)?) => {
        $( check_equivalence::<$ty>(&$reg, 50); )*
    };
}

#[test]
fn generated_and_dynamic_paths_agree() {
    let reg = SchemaRegistry::with_corpus();
    equivalence!(
        reg,
        std_msgs::Header,
        std_msgs::String,
        std_msgs::Int8,
        std_msgs::UInt8,
        std_msgs::Int32,
        std_msgs::UInt32,
        std_msgs::Int64,
        std_msgs::UInt64,
        std_msgs::Float32,
        std_msgs::Float64,
        std_msgs::Bool,
        std_msgs::Byte,
        std_msgs::Char,
        std_msgs::Empty,
        std_msgs::Time,
        std_msgs::Duration,
        std_msgs::ColorRGBA,
        std_msgs::MultiArrayDimension,
        std_msgs::MultiArrayLayout,
        std_msgs::UInt8MultiArray,
        std_msgs::Float64MultiArray,
        geometry_msgs::Vector3,
        geometry_msgs::Point,
        geometry_msgs::Point32,
        geometry_msgs::Quaternion,
        geometry_msgs::Pose,
        geometry_msgs::PoseStamped,
        geometry_msgs::PoseWithCovariance,
        geometry_msgs::Transform,
        geometry_msgs::TransformStamped,
        geometry_msgs::Twist,
        geometry_msgs::TwistStamped,
        geometry_msgs::TwistWithCovariance,
        sensor_msgs::LaserScan,
        sensor_msgs::JointState,
        sensor_msgs::Imu,
        nav_msgs::MapMetaData,
        nav_msgs::OccupancyGrid,
        nav_msgs::Odometry,
        tf2_msgs::TFMessage,
        rosgraph_msgs::Log,
        asset_msgs::Mesh,
        std_srvs::EmptyRequest,
        std_srvs::EmptyResponse,
        std_srvs::TriggerRequest,
        std_srvs::TriggerResponse,
        std_srvs::SetBoolRequest,
        std_srvs::SetBoolResponse,
        roscpp_tutorials::TwoIntsRequest,
        roscpp_tutorials::TwoIntsResponse,
        asset_msgs::GetAssetRequest,
        asset_msgs::GetAssetResponse,
    );
}

#[test]
fn fixed_array_container() {
    let p = geometry_msgs::PoseWithCovariance::default();
    assert_eq!(p.covariance.len(), 36);
    assert_eq!(p.to_bytes().len(), 7 * 8 + 36 * 8);
}

#[test]
fn constants_and_service_markers() {
    assert_eq!(rosgraph_msgs::Log::DEBUG, 1i8);
    assert_eq!(rosgraph_msgs::Log::FATAL, 16i8);
    assert_eq!(<std_srvs::Trigger as RosService>::MD5SUM, "937c9679a518e3a18d831e57125ea522");
    assert_eq!(<roscpp_tutorials::TwoInts as RosService>::MD5SUM, "6a2e34150c00229791cc89ff309fff21");
    assert_eq!(<std_srvs::Empty as RosService>::MD5SUM, "d41d8cd98f00b204e9800998ecf8427e");
}

#[test]
fn int32_bytes() {
    let v = std_msgs::Int32 { data: 7 };
    assert_eq!(v.to_bytes(), [7, 0, 0, 0]);
    assert_eq!(std_msgs::Int32::from_bytes(&[7, 0, 0, 0]).unwrap(), v);
}
