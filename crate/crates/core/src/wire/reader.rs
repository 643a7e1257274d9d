use super::{Duration, Time, WireError};

/// Bounds-checked little-endian cursor over one message body.
#[derive(Debug, Clone)]
pub struct WireReader<'a> {
    bytes: &'a [u8],
    cursor: usize,
}

macro_rules! read_num {
    ($($fn_name:ident => $ty:ty),* $(,)?) => {
        $(
            pub fn $fn_name(&mut self) -> Result<$ty, WireError> {
                let raw = self.take(std::mem::size_of::<$ty>())?;
                Ok(<$ty>::from_le_bytes(raw.try_into().expect("length checked")))
            }
        )*
    };
}

impl<'a> WireReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        WireReader { bytes, cursor: 0 }
    }

    pub fn position(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> usize {
        self.bytes.len() - self.cursor
    }

    pub fn take(&mut self, n: usize) -> Result<&'a [u8], WireError> {
        if n > self.remaining() {
            return Err(WireError::Truncated { offset: self.cursor });
        }
        let out = &self.bytes[self.cursor..self.cursor + n];
        self.cursor += n;
        Ok(out)
    }

    read_num! {
        read_u8 => u8, read_i8 => i8,
        read_u16 => u16, read_i16 => i16,
        read_u32 => u32, read_i32 => i32,
        read_u64 => u64, read_i64 => i64,
        read_f32 => f32, read_f64 => f64,
    }

    pub fn read_bool(&mut self) -> Result<bool, WireError> {
        Ok(self.read_u8()? != 0)
    }

    pub fn read_time(&mut self) -> Result<Time, WireError> {
        Ok(Time {
            sec: self.read_u32()?,
            nsec: self.read_u32()?,
        })
    }

    pub fn read_duration(&mut self) -> Result<Duration, WireError> {
        Ok(Duration {
            sec: self.read_i32()?,
            nsec: self.read_i32()?,
        })
    }

    /// Reads a `u32` count and checks that `count * min_element_size` bytes
    /// remain before anything is allocated.
    pub fn read_len(&mut self, min_element_size: usize) -> Result<usize, WireError> {
        let offset = self.cursor;
        let declared = self.read_u32()? as u64;
        let needed = declared.saturating_mul(min_element_size.max(1) as u64);
        if needed > self.remaining() as u64 {
            return Err(WireError::LengthOverrun {
                offset,
                declared,
                remaining: self.remaining(),
            });
        }
        Ok(declared as usize)
    }

    pub fn read_byte_seq(&mut self) -> Result<Vec<u8>, WireError> {
        let n = self.read_len(1)?;
        Ok(self.take(n)?.to_vec())
    }

    /// Length-prefixed UTF-8. `path` names the field in the error.
    pub fn read_string_at(&mut self, path: &dyn Fn() -> String) -> Result<String, WireError> {
        let n = self.read_len(1)?;
        let raw = self.take(n)?;
        std::str::from_utf8(raw)
            .map(str::to_string)
            .map_err(|_| WireError::InvalidUtf8 { path: path() })
    }

    pub fn read_string(&mut self) -> Result<String, WireError> {
        self.read_string_at(&|| "string".to_string())
    }

    pub fn finish(&self) -> Result<(), WireError> {
        match self.remaining() {
            0 => Ok(()),
            n => Err(WireError::TrailingBytes(n)),
        }
    }
}

/// Wire encoding for statically typed values. Generated message containers
/// implement this alongside [`RosMessage`].
pub trait WireField: Sized {
    /// Smallest encoded size of one value.
    const MIN_SIZE: usize;
    fn encode(&self, out: &mut Vec<u8>);
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError>;
    fn encoded_len(&self) -> usize;
}

macro_rules! wire_num {
    ($($ty:ty => $read:ident),* $(,)?) => {
        $(
            impl WireField for $ty {
                const MIN_SIZE: usize = std::mem::size_of::<$ty>();
                fn encode(&self, out: &mut Vec<u8>) {
                    out.extend_from_slice(&self.to_le_bytes());
                }
                fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
                    r.$read()
                }
                fn encoded_len(&self) -> usize {
                    std::mem::size_of::<$ty>()
                }
            }
        )*
    };
}

wire_num! {
    u8 => read_u8, i8 => read_i8, u16 => read_u16, i16 => read_i16,
    u32 => read_u32, i32 => read_i32, u64 => read_u64, i64 => read_i64,
    f32 => read_f32, f64 => read_f64,
}

impl WireField for bool {
    const MIN_SIZE: usize = 1;
    fn encode(&self, out: &mut Vec<u8>) {
        out.push(u8::from(*self));
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        r.read_bool()
    }
    fn encoded_len(&self) -> usize {
        1
    }
}

impl WireField for String {
    const MIN_SIZE: usize = 4;
    fn encode(&self, out: &mut Vec<u8>) {
        (self.len() as u32).encode(out);
        out.extend_from_slice(self.as_bytes());
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        r.read_string()
    }
    fn encoded_len(&self) -> usize {
        4 + self.len()
    }
}

impl WireField for Time {
    const MIN_SIZE: usize = 8;
    fn encode(&self, out: &mut Vec<u8>) {
        self.sec.encode(out);
        self.nsec.encode(out);
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        r.read_time()
    }
    fn encoded_len(&self) -> usize {
        8
    }
}

impl WireField for Duration {
    const MIN_SIZE: usize = 8;
    fn encode(&self, out: &mut Vec<u8>) {
        self.sec.encode(out);
        self.nsec.encode(out);
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        r.read_duration()
    }
    fn encoded_len(&self) -> usize {
        8
    }
}

/// Variable-length array: `u32` count then elements.
impl<T: WireField> WireField for Vec<T> {
    const MIN_SIZE: usize = 4;
    fn encode(&self, out: &mut Vec<u8>) {
        (self.len() as u32).encode(out);
        for item in self {
            item.encode(out);
        }
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        let n = r.read_len(T::MIN_SIZE)?;
        (0..n).map(|_| T::decode(r)).collect()
    }
    fn encoded_len(&self) -> usize {
        4 + self.iter().map(WireField::encoded_len).sum::<usize>()
    }
}

/// Fixed-length array: elements only, no prefix.
impl<T: WireField, const N: usize> WireField for [T; N] {
    const MIN_SIZE: usize = N * T::MIN_SIZE;
    fn encode(&self, out: &mut Vec<u8>) {
        for item in self {
            item.encode(out);
        }
    }
    fn decode(r: &mut WireReader<'_>) -> Result<Self, WireError> {
        let items = (0..N).map(|_| T::decode(r)).collect::<Result<Vec<T>, _>>()?;
        Ok(items.try_into().ok().expect("exactly N items"))
    }
    fn encoded_len(&self) -> usize {
        self.iter().map(WireField::encoded_len).sum()
    }
}

/// A statically typed message with its handshake metadata.
pub trait RosMessage: WireField + Clone + Send + Sync + 'static {
    const TYPE_NAME: &'static str;
    const MD5SUM: &'static str;
    const DEFINITION: &'static str;

    fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoded_len());
        self.encode(&mut out);
        out
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self, WireError> {
        let mut r = WireReader::new(bytes);
        let v = Self::decode(&mut r)?;
        r.finish()?;
        Ok(v)
    }
}

/// A service type: paired request/response containers and the combined checksum.
pub trait RosService: Send + Sync + 'static {
    type Request: RosMessage;
    type Response: RosMessage;
    const TYPE_NAME: &'static str;
    const MD5SUM: &'static str;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitives_little_endian() {
        let mut out = Vec::new();
        7i32.encode(&mut out);
        "ab".to_string().encode(&mut out);
        [1u16, 2].encode(&mut out);
        vec![true, false].encode(&mut out);
        assert_eq!(out, [7, 0, 0, 0, 2, 0, 0, 0, b'a', b'b', 1, 0, 2, 0, 2, 0, 0, 0, 1, 0]);
        let mut r = WireReader::new(&out);
        assert_eq!(i32::decode(&mut r).unwrap(), 7);
        assert_eq!(String::decode(&mut r).unwrap(), "ab");
        assert_eq!(<[u16; 2]>::decode(&mut r).unwrap(), [1, 2]);
        assert_eq!(Vec::<bool>::decode(&mut r).unwrap(), vec![true, false]);
        r.finish().unwrap();
    }

    #[test]
    fn length_guard_before_allocation() {
        let bytes = [0xff, 0xff, 0xff, 0xff, 0, 0];
        let mut r = WireReader::new(&bytes);
        assert_eq!(
            Vec::<f64>::decode(&mut r),
            Err(WireError::LengthOverrun { offset: 0, declared: u32::MAX as u64, remaining: 2 })
        );
    }

    #[test]
    fn truncation_and_trailing() {
        let mut r = WireReader::new(&[1, 2]);
        assert_eq!(r.read_u32(), Err(WireError::Truncated { offset: 0 }));
        let mut r = WireReader::new(&[1, 0, 0, 0, 9]);
        r.read_u32().unwrap();
        assert_eq!(r.finish(), Err(WireError::TrailingBytes(1)));
    }

    #[test]
    fn invalid_utf8_string() {
        let mut r = WireReader::new(&[2, 0, 0, 0, 0xc3, 0x28]);
        assert!(matches!(String::decode(&mut r), Err(WireError::InvalidUtf8 { .. })));
    }
}
