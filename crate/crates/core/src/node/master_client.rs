use std::time::Duration;

use crate::xmlrpc::{RosRpcReply, XmlRpcClient, XmlRpcError, XrValue};

use super::NodeError;

/// Typed wrapper over the master and parameter-server XML-RPC APIs.
#[derive(Debug, Clone)]
pub struct MasterClient {
    client: XmlRpcClient,
    caller_id: String,
}

fn is_transport(e: &XmlRpcError) -> bool {
    matches!(
        e,
        XmlRpcError::Io(_) | XmlRpcError::Timeout | XmlRpcError::HttpSyntax(_) | XmlRpcError::Http(_)
    )
}

impl MasterClient {
    pub fn new(master_uri: &str, caller_id: &str, timeout: Duration) -> Result<Self, NodeError> {
        Ok(MasterClient {
            client: XmlRpcClient::new(master_uri)?.with_timeout(timeout),
            caller_id: caller_id.to_string(),
        })
    }

    pub fn uri(&self) -> &str {
        self.client.uri()
    }

    pub fn caller_id(&self) -> &str {
        &self.caller_id
    }

    /// Raw call returning the reply triple; retried once on transport failure.
    pub fn call_raw(&self, method: &str, args: &[XrValue]) -> Result<RosRpcReply, NodeError> {
        let mut params = Vec::with_capacity(args.len() + 1);
        params.push(XrValue::str(&self.caller_id));
        params.extend_from_slice(args);
        match self.client.call_ros(method, &params) {
            Err(e) if is_transport(&e) => {
                log::debug!("master {method}: {e}; retrying once");
                self.client.call_ros(method, &params).map_err(|e| match e {
                    e if is_transport(&e) => NodeError::MasterUnreachable(format!("{}: {e}", self.uri())),
                    e => e.into(),
                })
            }
            other => Ok(other?),
        }
    }

    /// Call that must succeed with code 1; returns the payload.
    pub fn call(&self, method: &str, args: &[XrValue]) -> Result<XrValue, NodeError> {
        let reply = self.call_raw(method, args)?;
        if reply.code != RosRpcReply::SUCCESS {
            return Err(NodeError::Master {
                method: method.to_string(),
                code: reply.code,
                status: reply.status,
            });
        }
        Ok(reply.payload)
    }

    fn uri_list(method: &str, v: XrValue) -> Result<Vec<String>, NodeError> {
        v.as_str_list()
            .ok_or_else(|| NodeError::Protocol(format!("{method}: expected a list of URIs, got {v:?}")))
    }

    /// Returns the URIs of current subscribers.
    pub fn register_publisher(&self, topic: &str, type_name: &str, caller_api: &str) -> Result<Vec<String>, NodeError> {
        let v = self.call(
            "registerPublisher",
            &[XrValue::str(topic), XrValue::str(type_name), XrValue::str(caller_api)],
        )?;
        Self::uri_list("registerPublisher", v)
    }

    pub fn unregister_publisher(&self, topic: &str, caller_api: &str) -> Result<(), NodeError> {
        self.call("unregisterPublisher", &[XrValue::str(topic), XrValue::str(caller_api)])
            .map(|_| ())
    }

    /// Returns the URIs of current publishers.
    pub fn register_subscriber(&self, topic: &str, type_name: &str, caller_api: &str) -> Result<Vec<String>, NodeError> {
        let v = self.call(
            "registerSubscriber",
            &[XrValue::str(topic), XrValue::str(type_name), XrValue::str(caller_api)],
        )?;
        Self::uri_list("registerSubscriber", v)
    }

    pub fn unregister_subscriber(&self, topic: &str, caller_api: &str) -> Result<(), NodeError> {
        self.call("unregisterSubscriber", &[XrValue::str(topic), XrValue::str(caller_api)])
            .map(|_| ())
    }

    pub fn register_service(&self, service: &str, service_api: &str, caller_api: &str) -> Result<(), NodeError> {
        self.call(
            "registerService",
            &[XrValue::str(service), XrValue::str(service_api), XrValue::str(caller_api)],
        )
        .map(|_| ())
    }

    pub fn unregister_service(&self, service: &str, service_api: &str) -> Result<(), NodeError> {
        self.call("unregisterService", &[XrValue::str(service), XrValue::str(service_api)])
            .map(|_| ())
    }

    /// Returns the `rosrpc://host:port` URI of the service provider.
    pub fn lookup_service(&self, service: &str) -> Result<String, NodeError> {
        let reply = self.call_raw("lookupService", &[XrValue::str(service)])?;
        if reply.code != RosRpcReply::SUCCESS {
            return Err(NodeError::ServiceNotFound(service.to_string()));
        }
        reply
            .payload
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| NodeError::Protocol("lookupService: URI is not a string".into()))
    }

    pub fn lookup_node(&self, node: &str) -> Result<String, NodeError> {
        let v = self.call("lookupNode", &[XrValue::str(node)])?;
        v.as_str()
            .map(str::to_string)
            .ok_or_else(|| NodeError::Protocol("lookupNode: URI is not a string".into()))
    }

    /// `(publishers, subscribers, services)`, each a list of `(name, [node])`.
    pub fn get_system_state(&self) -> Result<SystemState, NodeError> {
        let v = self.call("getSystemState", &[])?;
        SystemState::from_value(&v).ok_or_else(|| NodeError::Protocol(format!("getSystemState: unexpected shape {v:?}")))
    }

    /// `(topic, type)` pairs.
    pub fn get_topic_types(&self) -> Result<Vec<(String, String)>, NodeError> {
        let v = self.call("getTopicTypes", &[])?;
        pairs(&v).ok_or_else(|| NodeError::Protocol("getTopicTypes: unexpected shape".into()))
    }

    pub fn get_published_topics(&self, subgraph: &str) -> Result<Vec<(String, String)>, NodeError> {
        let v = self.call("getPublishedTopics", &[XrValue::str(subgraph)])?;
        pairs(&v).ok_or_else(|| NodeError::Protocol("getPublishedTopics: unexpected shape".into()))
    }

    pub fn get_uri(&self) -> Result<String, NodeError> {
        let v = self.call("getUri", &[])?;
        v.as_str()
            .map(str::to_string)
            .ok_or_else(|| NodeError::Protocol("getUri: URI is not a string".into()))
    }

    pub fn get_param(&self, key: &str) -> Result<XrValue, NodeError> {
        let reply = self.call_raw("getParam", &[XrValue::str(key)])?;
        if reply.code != RosRpcReply::SUCCESS {
            return Err(NodeError::ParamNotFound(key.to_string()));
        }
        Ok(reply.payload)
    }

    pub fn set_param(&self, key: &str, value: XrValue) -> Result<(), NodeError> {
        self.call("setParam", &[XrValue::str(key), value]).map(|_| ())
    }

    pub fn has_param(&self, key: &str) -> Result<bool, NodeError> {
        match self.call("hasParam", &[XrValue::str(key)])? {
            XrValue::Bool(b) => Ok(b),
            XrValue::Int(i) => Ok(i != 0),
            other => Err(NodeError::Protocol(format!("hasParam: unexpected {other:?}"))),
        }
    }

    pub fn delete_param(&self, key: &str) -> Result<(), NodeError> {
        let reply = self.call_raw("deleteParam", &[XrValue::str(key)])?;
        if reply.code != RosRpcReply::SUCCESS {
            return Err(NodeError::ParamNotFound(key.to_string()));
        }
        Ok(())
    }

    /// Finds the closest enclosing-namespace match for `key`.
    pub fn search_param(&self, key: &str) -> Result<String, NodeError> {
        let reply = self.call_raw("searchParam", &[XrValue::str(key)])?;
        match (reply.code, reply.payload) {
            (RosRpcReply::SUCCESS, XrValue::Str(found)) if !found.is_empty() => Ok(found),
            _ => Err(NodeError::ParamNotFound(key.to_string())),
        }
    }

    pub fn get_param_names(&self) -> Result<Vec<String>, NodeError> {
        let v = self.call("getParamNames", &[])?;
        v.as_str_list()
            .ok_or_else(|| NodeError::Protocol("getParamNames: expected a list of strings".into()))
    }
}

fn pairs(v: &XrValue) -> Option<Vec<(String, String)>> {
    v.as_seq()?
        .iter()
        .map(|p| match p.as_seq()? {
            [a, b] => Some((a.as_str()?.to_string(), b.as_str()?.to_string())),
            _ => None,
        })
        .collect()
}

/// Graph snapshot as returned by `getSystemState`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SystemState {
    pub publishers: Vec<(String, Vec<String>)>,
    pub subscribers: Vec<(String, Vec<String>)>,
    pub services: Vec<(String, Vec<String>)>,
}

impl SystemState {
    pub fn from_value(v: &XrValue) -> Option<SystemState> {
        fn section(v: &XrValue) -> Option<Vec<(String, Vec<String>)>> {
            v.as_seq()?
                .iter()
                .map(|entry| match entry.as_seq()? {
                    [name, nodes] => Some((name.as_str()?.to_string(), nodes.as_str_list()?)),
                    _ => None,
                })
                .collect()
        }
        match v.as_seq()? {
            [p, s, srv] => Some(SystemState {
                publishers: section(p)?,
                subscribers: section(s)?,
                services: section(srv)?,
            }),
            _ => None,
        }
    }

    pub fn to_value(&self) -> XrValue {
        fn section(s: &[(String, Vec<String>)]) -> XrValue {
            XrValue::Seq(
                s.iter()
                    .map(|(name, nodes)| {
                        XrValue::Seq(vec![
                            XrValue::str(name),
                            XrValue::Seq(nodes.iter().map(XrValue::str).collect()),
                        ])
                    })
                    .collect(),
            )
        }
        XrValue::Seq(vec![
            section(&self.publishers),
            section(&self.subscribers),
            section(&self.services),
        ])
    }

    /// Every node name mentioned anywhere, sorted and deduplicated.
    pub fn nodes(&self) -> Vec<String> {
        let mut all: Vec<String> = self
            .publishers
            .iter()
            .chain(&self.subscribers)
            .chain(&self.services)
            .flat_map(|(_, n)| n.iter().cloned())
            .collect();
        all.sort();
        all.dedup();
        all
    }
}
