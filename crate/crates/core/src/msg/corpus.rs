//! Standard definitions compiled into the library so the stack works without a ROS install.

pub(crate) const MESSAGES: &[(&str, &str)] = &[
    ("asset_msgs/Mesh", include_str!("../../defs/asset_msgs/msg/Mesh.msg")),
    ("geometry_msgs/Point", include_str!("../../defs/geometry_msgs/msg/Point.msg")),
    ("geometry_msgs/Point32", include_str!("../../defs/geometry_msgs/msg/Point32.msg")),
    ("geometry_msgs/Pose", include_str!("../../defs/geometry_msgs/msg/Pose.msg")),
    ("geometry_msgs/PoseStamped", include_str!("../../defs/geometry_msgs/msg/PoseStamped.msg")),
    ("geometry_msgs/PoseWithCovariance", include_str!("../../defs/geometry_msgs/msg/PoseWithCovariance.msg")),
    ("geometry_msgs/Quaternion", include_str!("../../defs/geometry_msgs/msg/Quaternion.msg")),
    ("geometry_msgs/Transform", include_str!("../../defs/geometry_msgs/msg/Transform.msg")),
    ("geometry_msgs/TransformStamped", include_str!("../../defs/geometry_msgs/msg/TransformStamped.msg")),
    ("geometry_msgs/Twist", include_str!("../../defs/geometry_msgs/msg/Twist.msg")),
    ("geometry_msgs/TwistStamped", include_str!("../../defs/geometry_msgs/msg/TwistStamped.msg")),
    ("geometry_msgs/TwistWithCovariance", include_str!("../../defs/geometry_msgs/msg/TwistWithCovariance.msg")),
    ("geometry_msgs/Vector3", include_str!("../../defs/geometry_msgs/msg/Vector3.msg")),
    ("nav_msgs/MapMetaData", include_str!("../../defs/nav_msgs/msg/MapMetaData.msg")),
    ("nav_msgs/OccupancyGrid", include_str!("../../defs/nav_msgs/msg/OccupancyGrid.msg")),
    ("nav_msgs/Odometry", include_str!("../../defs/nav_msgs/msg/Odometry.msg")),
    ("rosgraph_msgs/Log", include_str!("../../defs/rosgraph_msgs/msg/Log.msg")),
    ("sensor_msgs/Imu", include_str!("../../defs/sensor_msgs/msg/Imu.msg")),
    ("sensor_msgs/JointState", include_str!("../../defs/sensor_msgs/msg/JointState.msg")),
    ("sensor_msgs/LaserScan", include_str!("../../defs/sensor_msgs/msg/LaserScan.msg")),
    ("std_msgs/Bool", include_str!("../../defs/std_msgs/msg/Bool.msg")),
    ("std_msgs/Byte", include_str!("../../defs/std_msgs/msg/Byte.msg")),
    ("std_msgs/Char", include_str!("../../defs/std_msgs/msg/Char.msg")),
    ("std_msgs/ColorRGBA", include_str!("../../defs/std_msgs/msg/ColorRGBA.msg")),
    ("std_msgs/Duration", include_str!("../../defs/std_msgs/msg/Duration.msg")),
    ("std_msgs/Empty", include_str!("../../defs/std_msgs/msg/Empty.msg")),
    ("std_msgs/Float32", include_str!("../../defs/std_msgs/msg/Float32.msg")),
    ("std_msgs/Float64", include_str!("../../defs/std_msgs/msg/Float64.msg")),
    ("std_msgs/Float64MultiArray", include_str!("../../defs/std_msgs/msg/Float64MultiArray.msg")),
    ("std_msgs/Header", include_str!("../../defs/std_msgs/msg/Header.msg")),
    ("std_msgs/Int32", include_str!("../../defs/std_msgs/msg/Int32.msg")),
    ("std_msgs/Int64", include_str!("../../defs/std_msgs/msg/Int64.msg")),
    ("std_msgs/Int8", include_str!("../../defs/std_msgs/msg/Int8.msg")),
    ("std_msgs/MultiArrayDimension", include_str!("../../defs/std_msgs/msg/MultiArrayDimension.msg")),
    ("std_msgs/MultiArrayLayout", include_str!("../../defs/std_msgs/msg/MultiArrayLayout.msg")),
    ("std_msgs/String", include_str!("../../defs/std_msgs/msg/String.msg")),
    ("std_msgs/Time", include_str!("../../defs/std_msgs/msg/Time.msg")),
    ("std_msgs/UInt32", include_str!("../../defs/std_msgs/msg/UInt32.msg")),
    ("std_msgs/UInt64", include_str!("../../defs/std_msgs/msg/UInt64.msg")),
    ("std_msgs/UInt8", include_str!("../../defs/std_msgs/msg/UInt8.msg")),
    ("std_msgs/UInt8MultiArray", include_str!("../../defs/std_msgs/msg/UInt8MultiArray.msg")),
    ("tf2_msgs/TFMessage", include_str!("../../defs/tf2_msgs/msg/TFMessage.msg")),
];

pub(crate) const SERVICES: &[(&str, &str)] = &[
    ("asset_msgs/GetAsset", include_str!("../../defs/asset_msgs/srv/GetAsset.srv")),
    ("roscpp_tutorials/TwoInts", include_str!("../../defs/roscpp_tutorials/srv/TwoInts.srv")),
    ("std_srvs/Empty", include_str!("../../defs/std_srvs/srv/Empty.srv")),
    ("std_srvs/SetBool", include_str!("../../defs/std_srvs/srv/SetBool.srv")),
    ("std_srvs/Trigger", include_str!("../../defs/std_srvs/srv/Trigger.srv")),
];
