//! Tokenizer for the text format. Tracks 1-based line/column positions
//! so diagnostics can point at the first offending token.

use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokKind {
    Name,
    Int,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Eq,
    Star,
    Lt,
    Arrow,  // ->
    MapsTo, // |->
    Eof,
}

impl TokKind {
    pub fn describe(self) -> &'static str {
        match self {
            TokKind::Name => "identifier",
            TokKind::Int => "integer",
            TokKind::LBrace => "'{'",
            TokKind::RBrace => "'}'",
            TokKind::LBracket => "'['",
            TokKind::RBracket => "']'",
            TokKind::Colon => "':'",
            TokKind::Semi => "';'",
            TokKind::Comma => "','",
            TokKind::Eq => "'='",
            TokKind::Star => "'*'",
            TokKind::Lt => "'<'",
            TokKind::Arrow => "'->'",
            TokKind::MapsTo => "'|->'",
            TokKind::Eof => "end of input",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokKind,
    pub text: String,
    pub line: usize,
    pub col: usize,
}

pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0usize;
    let mut line = 1usize;
    let mut col = 1usize;
    macro_rules! advance {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance!();
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance!();
            }
            continue;
        }
        let (start_line, start_col) = (line, col);
        let simple = |kind: TokKind, text: &str| Token {
            kind,
            text: text.to_string(),
            line: start_line,
            col: start_col,
        };
        match c {
            '{' => {
                tokens.push(simple(TokKind::LBrace, "{"));
                advance!();
            }
            '}' => {
                tokens.push(simple(TokKind::RBrace, "}"));
                advance!();
            }
            '[' => {
                tokens.push(simple(TokKind::LBracket, "["));
                advance!();
            }
            ']' => {
                tokens.push(simple(TokKind::RBracket, "]"));
                advance!();
            }
            ':' => {
                tokens.push(simple(TokKind::Colon, ":"));
                advance!();
            }
            ';' => {
                tokens.push(simple(TokKind::Semi, ";"));
                advance!();
            }
            ',' => {
                tokens.push(simple(TokKind::Comma, ","));
                advance!();
            }
            '=' => {
                tokens.push(simple(TokKind::Eq, "="));
                advance!();
            }
            '*' => {
                tokens.push(simple(TokKind::Star, "*"));
                advance!();
            }
            '<' => {
                tokens.push(simple(TokKind::Lt, "<"));
                advance!();
            }
            '-' => {
                advance!();
                if i < chars.len() && chars[i] == '>' {
                    tokens.push(simple(TokKind::Arrow, "->"));
                    advance!();
                } else if i < chars.len() && chars[i].is_ascii_digit() {
                    let mut text = String::from("-");
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        text.push(chars[i]);
                        advance!();
                    }
                    tokens.push(Token {
                        kind: TokKind::Int,
                        text,
                        line: start_line,
                        col: start_col,
                    });
                } else {
                    return Err(ParseError {
                        line: start_line,
                        column: start_col,
                        message: "stray '-'".to_string(),
                        expected: vec!["'->'".to_string(), "integer".to_string()],
                    });
                }
            }
            '|' => {
                advance!();
                if i + 1 < chars.len() && chars[i] == '-' && chars[i + 1] == '>' {
                    advance!();
                    advance!();
                    tokens.push(simple(TokKind::MapsTo, "|->"));
                } else {
                    return Err(ParseError {
                        line: start_line,
                        column: start_col,
                        message: "stray '|'".to_string(),
                        expected: vec!["'|->'".to_string()],
                    });
                }
            }
            _ if c.is_ascii_digit() => {
                let mut text = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    text.push(chars[i]);
                    advance!();
                }
                tokens.push(Token {
                    kind: TokKind::Int,
                    text,
                    line: start_line,
                    col: start_col,
                });
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut text = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    text.push(chars[i]);
                    advance!();
                }
                tokens.push(Token {
                    kind: TokKind::Name,
                    text,
                    line: start_line,
                    col: start_col,
                });
            }
            _ => {
                return Err(ParseError {
                    line: start_line,
                    column: start_col,
                    message: format!("unexpected character '{}'", c),
                    expected: vec!["token".to_string()],
                });
            }
        }
    }
    tokens.push(Token {
        kind: TokKind::Eof,
        text: String::new(),
        line,
        col,
    });
    Ok(tokens)
}
