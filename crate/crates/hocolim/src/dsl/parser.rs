//! Recursive-descent parser for the text format. Purely syntactic: it
//! produces a [`Document`](super::Document); reference resolution and
//! mathematical validation happen in [`elaborate`](super::elaborate).

use super::lexer::{lex, TokKind, Token};
use super::{
    CategoryDecl, Decl, DiagramDecl, Document, FpDecl, GenDecl, MapDecl, MorDecl, ParseError,
    PosetDecl, SsetDecl, WeightsDecl,
};
use num_bigint::BigInt;

pub fn parse(src: &str) -> Result<Document, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut decls = Vec::new();
    loop {
        if p.peek().kind == TokKind::Eof {
            break;
        }
        decls.push(p.decl()?);
    }
    Ok(Document { decls })
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek2(&self) -> &Token {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: Vec<String>) -> ParseError {
        let t = self.peek();
        let found = if t.kind == TokKind::Eof {
            "end of input".to_string()
        } else {
            format!("'{}'", t.text)
        };
        ParseError {
            line: t.line,
            column: t.col,
            message: format!("unexpected {}", found),
            expected,
        }
    }

    fn expect(&mut self, kind: TokKind) -> Result<Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error_here(vec![kind.describe().to_string()]))
        }
    }

    fn expect_name(&mut self) -> Result<String, ParseError> {
        Ok(self.expect(TokKind::Name)?.text)
    }

    fn at_keyword(&self, kw: &str) -> bool {
        self.peek().kind == TokKind::Name && self.peek().text == kw
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.at_keyword(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(vec![format!("'{}'", kw)]))
        }
    }

    fn expect_usize(&mut self) -> Result<usize, ParseError> {
        let t = self.expect(TokKind::Int)?;
        t.text.parse::<usize>().map_err(|_| ParseError {
            line: t.line,
            column: t.col,
            message: format!("'{}' is not a non-negative integer", t.text),
            expected: vec!["non-negative integer".to_string()],
        })
    }

    fn expect_bigint(&mut self) -> Result<BigInt, ParseError> {
        let t = self.expect(TokKind::Int)?;
        t.text.parse::<BigInt>().map_err(|_| ParseError {
            line: t.line,
            column: t.col,
            message: format!("'{}' is not an integer", t.text),
            expected: vec!["integer".to_string()],
        })
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        let expected = || {
            vec![
                "'sset'".to_string(),
                "'map'".to_string(),
                "'poset'".to_string(),
                "'category'".to_string(),
                "'diagram'".to_string(),
                "'weights'".to_string(),
            ]
        };
        if self.peek().kind != TokKind::Name {
            return Err(self.error_here(expected()));
        }
        match self.peek().text.as_str() {
            "sset" => self.sset_decl().map(Decl::Sset),
            "map" => self.map_decl().map(Decl::Map),
            "poset" => self.poset_decl().map(Decl::Poset),
            "category" => self.category_decl().map(Decl::Category),
            "diagram" => self.diagram_decl().map(Decl::Diagram),
            "weights" => self.weights_decl().map(Decl::Weights),
            _ => Err(self.error_here(expected())),
        }
    }

    /// One face pointer: degeneracy markers (`s` + digits, each followed
    /// by another name) and then the target generator name.
    fn face_pointer(&mut self) -> Result<FpDecl, ParseError> {
        let mut word = Vec::new();
        loop {
            let name = self.expect_name()?;
            let is_marker = name.len() > 1
                && name.starts_with('s')
                && name[1..].chars().all(|c| c.is_ascii_digit());
            if is_marker && self.peek().kind == TokKind::Name {
                word.push(name[1..].parse::<usize>().map_err(|_| {
                    self.error_here(vec!["degeneracy index".to_string()])
                })?);
            } else {
                return Ok(FpDecl { word, target: name });
            }
        }
    }

    fn sset_decl(&mut self) -> Result<SsetDecl, ParseError> {
        self.expect_keyword("sset")?;
        let name = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        let mut gens = Vec::new();
        while self.peek().kind != TokKind::RBrace {
            let gen_name = self.expect_name()?;
            self.expect(TokKind::Colon)?;
            let dim = self.expect_usize()?;
            let mut faces = Vec::new();
            if self.at_keyword("faces") && self.peek2().kind == TokKind::Eq {
                self.bump();
                self.bump();
                faces.push(self.face_pointer()?);
                while self.peek().kind == TokKind::Comma {
                    self.bump();
                    faces.push(self.face_pointer()?);
                }
            }
            gens.push(GenDecl {
                name: gen_name,
                dim,
                faces,
            });
        }
        self.expect(TokKind::RBrace)?;
        Ok(SsetDecl { name, gens })
    }

    fn map_decl(&mut self) -> Result<MapDecl, ParseError> {
        self.expect_keyword("map")?;
        let name = self.expect_name()?;
        self.expect(TokKind::Colon)?;
        let source = self.expect_name()?;
        self.expect(TokKind::Arrow)?;
        let target = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        let mut entries = Vec::new();
        while self.peek().kind != TokKind::RBrace {
            let gen = self.expect_name()?;
            self.expect(TokKind::MapsTo)?;
            entries.push((gen, self.face_pointer()?));
        }
        self.expect(TokKind::RBrace)?;
        Ok(MapDecl {
            name,
            source,
            target,
            entries,
        })
    }

    fn poset_decl(&mut self) -> Result<PosetDecl, ParseError> {
        self.expect_keyword("poset")?;
        let name = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        self.expect_keyword("elements")?;
        let mut elements = vec![self.expect_name()?];
        while self.peek().kind == TokKind::Name {
            elements.push(self.expect_name()?);
        }
        self.expect(TokKind::Semi)?;
        let mut relations = Vec::new();
        while self.at_keyword("rel") {
            self.bump();
            let a = self.expect_name()?;
            self.expect(TokKind::Lt)?;
            let b = self.expect_name()?;
            self.expect(TokKind::Semi)?;
            relations.push((a, b));
        }
        self.expect(TokKind::RBrace)
            .map_err(|mut e| {
                e.expected = vec!["'rel'".to_string(), "'}'".to_string()];
                e
            })?;
        Ok(PosetDecl {
            name,
            elements,
            relations,
        })
    }

    fn category_decl(&mut self) -> Result<CategoryDecl, ParseError> {
        self.expect_keyword("category")?;
        let name = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        self.expect_keyword("objects")?;
        let mut objects = vec![self.expect_name()?];
        while self.peek().kind == TokKind::Name
            && !self.at_keyword("mor")
            && !self.at_keyword("comp")
        {
            objects.push(self.expect_name()?);
        }
        self.expect(TokKind::Semi)?;
        let mut morphisms = Vec::new();
        while self.at_keyword("mor") {
            self.bump();
            let m = self.expect_name()?;
            self.expect(TokKind::Colon)?;
            let src = self.expect_name()?;
            self.expect(TokKind::Arrow)?;
            let dst = self.expect_name()?;
            self.expect(TokKind::Semi)?;
            morphisms.push(MorDecl { name: m, src, dst });
        }
        let mut composites = Vec::new();
        while self.at_keyword("comp") {
            self.bump();
            let g = self.expect_name()?;
            self.expect(TokKind::Star)?;
            let f = self.expect_name()?;
            self.expect(TokKind::Eq)?;
            let h = self.expect_name()?;
            self.expect(TokKind::Semi)?;
            composites.push((g, f, h));
        }
        self.expect(TokKind::RBrace).map_err(|mut e| {
            e.expected = vec![
                "'mor'".to_string(),
                "'comp'".to_string(),
                "'}'".to_string(),
            ];
            e
        })?;
        Ok(CategoryDecl {
            name,
            objects,
            morphisms,
            composites,
        })
    }

    fn diagram_decl(&mut self) -> Result<DiagramDecl, ParseError> {
        self.expect_keyword("diagram")?;
        let name = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        self.expect_keyword("index")?;
        let index = self.expect_name()?;
        self.expect(TokKind::Semi)?;
        let mut fibers = Vec::new();
        while self.at_keyword("fiber") {
            self.bump();
            let obj = self.expect_name()?;
            self.expect(TokKind::Eq)?;
            let poset = self.expect_name()?;
            self.expect(TokKind::Semi)?;
            fibers.push((obj, poset));
        }
        let mut transitions = Vec::new();
        while self.at_keyword("transition") {
            self.bump();
            let mor = self.expect_name()?;
            self.expect(TokKind::Eq)?;
            self.expect(TokKind::LBrace)?;
            let mut entries = Vec::new();
            while self.peek().kind != TokKind::RBrace {
                let from = self.expect_name()?;
                self.expect(TokKind::MapsTo)?;
                let to = self.expect_name()?;
                entries.push((from, to));
            }
            self.expect(TokKind::RBrace)?;
            self.expect(TokKind::Semi)?;
            transitions.push((mor, entries));
        }
        self.expect(TokKind::RBrace).map_err(|mut e| {
            e.expected = vec![
                "'fiber'".to_string(),
                "'transition'".to_string(),
                "'}'".to_string(),
            ];
            e
        })?;
        Ok(DiagramDecl {
            name,
            index,
            fibers,
            transitions,
        })
    }

    fn weights_decl(&mut self) -> Result<WeightsDecl, ParseError> {
        self.expect_keyword("weights")?;
        let name = self.expect_name()?;
        self.expect(TokKind::LBrace)?;
        self.expect_keyword("over")?;
        let over = self.expect_name()?;
        self.expect(TokKind::Semi)?;
        self.expect_keyword("arity")?;
        let arity = self.expect_usize()?;
        self.expect(TokKind::Semi)?;
        let mut entries = Vec::new();
        while self.peek().kind == TokKind::Name {
            let vertex = self.expect_name()?;
            self.expect(TokKind::Eq)?;
            self.expect(TokKind::LBracket)?;
            let mut vector = vec![self.expect_bigint()?];
            while self.peek().kind == TokKind::Comma {
                self.bump();
                vector.push(self.expect_bigint()?);
            }
            self.expect(TokKind::RBracket)?;
            self.expect(TokKind::Semi)?;
            entries.push((vertex, vector));
        }
        self.expect(TokKind::RBrace)?;
        Ok(WeightsDecl {
            name,
            over,
            arity,
            entries,
        })
    }
}
