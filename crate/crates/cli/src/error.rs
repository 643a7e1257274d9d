use std::fmt;

use roslite::asset::AssetError;
use roslite::bridge::BridgeError;
use roslite::msg::SchemaError;
use roslite::node::NodeError;
use roslite::tcpros::TcprosError;
use roslite::wire::WireError;
use roslite::xmlrpc::XmlRpcError;

/// Process exit codes. Stable; scripts depend on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failure = 1,
    Master = 2,
    Handshake = 3,
    Timeout = 4,
    Service = 5,
    Param = 6,
    Usage = 64,
}

#[derive(Debug)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn new(exit: Exit, message: impl Into<String>) -> Self {
        CliError {
            exit,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Exit::Usage, message)
    }

    pub fn timeout(message: impl Into<String>) -> Self {
        Self::new(Exit::Timeout, message)
    }

    /// Re-tags errors that belong to a service or parameter command.
    pub fn in_service(mut self) -> Self {
        if matches!(self.exit, Exit::Failure) {
            self.exit = Exit::Service;
        }
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

impl From<NodeError> for CliError {
    fn from(e: NodeError) -> Self {
        let exit = match &e {
            NodeError::MasterUnreachable(_) | NodeError::Master { .. } => Exit::Master,
            NodeError::Timeout => Exit::Timeout,
            NodeError::ServiceNotFound(_) | NodeError::RemoteFailure(_) => Exit::Service,
            NodeError::ParamNotFound(_) => Exit::Param,
            NodeError::InvalidName(_) | NodeError::Schema(_) | NodeError::Wire(_) => Exit::Usage,
            NodeError::Tcpros(TcprosError::HandshakeRejected(_) | TcprosError::Md5Mismatch { .. }) => Exit::Handshake,
            NodeError::Tcpros(TcprosError::Timeout) => Exit::Timeout,
            NodeError::XmlRpc(_) => Exit::Master,
            _ => Exit::Failure,
        };
        CliError::new(exit, e.to_string())
    }
}

impl From<BridgeError> for CliError {
    fn from(e: BridgeError) -> Self {
        match e {
            BridgeError::Node(n) => n.into(),
            e @ (BridgeError::SchemaMismatch { .. }
            | BridgeError::UnknownField { .. }
            | BridgeError::Schema(_)
            | BridgeError::Wire(_)
            | BridgeError::TokenRequired(_)
            | BridgeError::BadRequest(_)) => CliError::usage(e.to_string()),
            e => CliError::new(Exit::Failure, e.to_string()),
        }
    }
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<WireError> for CliError {
    fn from(e: WireError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<XmlRpcError> for CliError {
    fn from(e: XmlRpcError) -> Self {
        CliError::new(Exit::Master, e.to_string())
    }
}

impl From<AssetError> for CliError {
    fn from(e: AssetError) -> Self {
        let exit = match e {
            AssetError::Service(_) => Exit::Service,
            _ => Exit::Failure,
        };
        CliError::new(exit, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(Exit::Failure, e.to_string())
    }
}
