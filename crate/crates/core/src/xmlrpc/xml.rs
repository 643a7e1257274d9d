//! Recursive-descent parser for the XML subset XML-RPC uses: elements,
//! attributes (skipped), text, comments, CDATA and the five predefined plus
//! numeric entities. No DTDs, no namespaces.

use super::XmlRpcError;

/// Hard cap on element nesting, well above what a depth-64 value needs.
const MAX_ELEMENT_DEPTH: usize = 4 * super::MAX_VALUE_DEPTH + 16;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Node {
    Element(Element),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Element {
    pub name: String,
    pub children: Vec<Node>,
}

impl Element {
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.children.iter().filter_map(|c| match c {
            Node::Element(e) => Some(e),
            Node::Text(_) => None,
        })
    }

    pub fn text(&self) -> String {
        self.children
            .iter()
            .filter_map(|c| match c {
                Node::Text(t) => Some(t.as_str()),
                Node::Element(_) => None,
            })
            .collect()
    }

    pub fn child(&self, name: &str) -> Option<&Element> {
        self.elements().find(|e| e.name == name)
    }
}

fn err(pos: usize, msg: impl Into<String>) -> XmlRpcError {
    XmlRpcError::XmlSyntax(format!("at byte {pos}: {}", msg.into()))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn skip_past(&mut self, terminator: &str) -> Result<(), XmlRpcError> {
        match self.rest().find(terminator) {
            Some(i) => {
                self.pos += i + terminator.len();
                Ok(())
            }
            None => Err(err(self.pos, format!("unterminated construct, expected {terminator:?}"))),
        }
    }

    /// Prolog, comments and doctype before or after the root element.
    fn skip_misc(&mut self) -> Result<(), XmlRpcError> {
        loop {
            self.skip_ws();
            let rest = self.rest();
            if rest.starts_with("<?") {
                self.skip_past("?>")?;
            } else if rest.starts_with("<!--") {
                self.skip_past("-->")?;
            } else if rest.starts_with("<!DOCTYPE") {
                return Err(err(self.pos, "DOCTYPE not supported"));
            } else {
                return Ok(());
            }
        }
    }

    fn name(&mut self) -> Result<String, XmlRpcError> {
        let rest = self.rest();
        let end = rest
            .find(|c: char| c.is_whitespace() || c == '>' || c == '/')
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(err(self.pos, "expected element name"));
        }
        let name = &rest[..end];
        if !name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':'))
        {
            return Err(err(self.pos, format!("invalid element name {name:?}")));
        }
        self.pos += end;
        Ok(name.to_string())
    }

    /// Skips attributes; returns true for a self-closing tag.
    fn tag_tail(&mut self) -> Result<bool, XmlRpcError> {
        let mut quote: Option<char> = None;
        for (i, c) in self.rest().char_indices() {
            match (quote, c) {
                (Some(q), c) if c == q => quote = None,
                (Some(_), _) => {}
                (None, '"' | '\'') => quote = Some(c),
                (None, '<') => return Err(err(self.pos + i, "'<' inside tag")),
                (None, '>') => {
                    let self_closing = self.rest()[..i].trim_end().ends_with('/');
                    self.pos += i + 1;
                    return Ok(self_closing);
                }
                _ => {}
            }
        }
        Err(err(self.pos, "unterminated tag"))
    }

    fn element(&mut self, depth: usize) -> Result<Element, XmlRpcError> {
        if depth > MAX_ELEMENT_DEPTH {
            return Err(XmlRpcError::DepthExceeded);
        }
        if !self.rest().starts_with('<') {
            return Err(err(self.pos, "expected '<'"));
        }
        self.pos += 1;
        let name = self.name()?;
        let mut element = Element {
            name,
            children: Vec::new(),
        };
        if self.tag_tail()? {
            return Ok(element);
        }
        loop {
            let rest = self.rest();
            if rest.is_empty() {
                return Err(err(self.pos, format!("unclosed element <{}>", element.name)));
            }
            if rest.starts_with("</") {
                self.pos += 2;
                let close = self.name()?;
                if close != element.name {
                    return Err(err(self.pos, format!("</{close}> closes <{}>", element.name)));
                }
                self.skip_ws();
                if !self.rest().starts_with('>') {
                    return Err(err(self.pos, "expected '>'"));
                }
                self.pos += 1;
                return Ok(element);
            } else if rest.starts_with("<!--") {
                self.skip_past("-->")?;
            } else if let Some(cdata) = rest.strip_prefix("<![CDATA[") {
                let end = cdata.find("]]>").ok_or_else(|| err(self.pos, "unterminated CDATA"))?;
                element.children.push(Node::Text(cdata[..end].to_string()));
                self.pos += "<![CDATA[".len() + end + 3;
            } else if rest.starts_with('<') {
                let child = self.element(depth + 1)?;
                element.children.push(Node::Element(child));
            } else {
                let end = rest.find('<').unwrap_or(rest.len());
                let text = decode_entities(&rest[..end], self.pos)?;
                self.pos += end;
                match element.children.last_mut() {
                    Some(Node::Text(prev)) => prev.push_str(&text),
                    _ => element.children.push(Node::Text(text)),
                }
            }
        }
    }
}

fn decode_entities(raw: &str, base: usize) -> Result<String, XmlRpcError> {
    if !raw.contains('&') {
        return Ok(raw.to_string());
    }
    let mut out = String::with_capacity(raw.len());
    let mut rest = raw;
    while let Some(amp) = rest.find('&') {
        out.push_str(&rest[..amp]);
        let tail = &rest[amp + 1..];
        let semi = tail
            .find(';')
            .filter(|&i| i <= 10)
            .ok_or_else(|| err(base, "unterminated entity"))?;
        let entity = &tail[..semi];
        let ch = match entity {
            "lt" => '<',
            "gt" => '>',
            "amp" => '&',
            "quot" => '"',
            "apos" => '\'',
            _ => {
                let code = if let Some(hex) = entity.strip_prefix("#x").or_else(|| entity.strip_prefix("#X")) {
                    u32::from_str_radix(hex, 16).ok()
                } else if let Some(dec) = entity.strip_prefix('#') {
                    dec.parse().ok()
                } else {
                    None
                };
                code.and_then(char::from_u32)
                    .ok_or_else(|| err(base, format!("unknown entity &{entity};")))?
            }
        };
        out.push(ch);
        rest = &tail[semi + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

pub(crate) fn escape(text: &str, out: &mut String) {
    for c in text.chars() {
        match c {
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '&' => out.push_str("&amp;"),
            // Preserve carriage returns through XML line-end normalization.
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
}

pub(crate) fn parse_document(src: &str) -> Result<Element, XmlRpcError> {
    let mut p = Parser { src, pos: 0 };
    p.skip_misc()?;
    let root = p.element(0)?;
    p.skip_misc()?;
    if !p.rest().is_empty() {
        return Err(err(p.pos, "content after root element"));
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_document() {
        let doc = parse_document("<?xml version=\"1.0\"?>\n<!-- c --><a x='1'><b>hi &amp; &#65;&#x42;</b><c/><![CDATA[<raw>]]></a>\n").unwrap();
        assert_eq!(doc.name, "a");
        assert_eq!(doc.child("b").unwrap().text(), "hi & AB");
        assert!(doc.child("c").unwrap().children.is_empty());
        assert_eq!(doc.text(), "<raw>");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "<a>", "<a></b>", "<a>&bogus;</a>", "<a></a><b/>", "<a x=\"1></a>", "<!DOCTYPE x><a/>", "<>"] {
            assert!(parse_document(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn depth_limit() {
        let deep = "<a>".repeat(1000) + &"</a>".repeat(1000);
        assert!(matches!(parse_document(&deep), Err(XmlRpcError::DepthExceeded)));
    }

    #[test]
    fn escape_round_trip() {
        let mut s = String::new();
        escape("a<b>&c\r\n", &mut s);
        assert_eq!(decode_entities(&s, 0).unwrap(), "a<b>&c\r\n");
    }
}
