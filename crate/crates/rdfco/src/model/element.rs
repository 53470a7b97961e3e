use std::fmt;
use std::str::FromStr;

macro_rules! elements {
    ($($variant:ident => $name:literal, dl: $dl:literal, cwa: $cwa:literal;)*) => {
        /// The operator a generic constraint row applies.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Element {
            $($variant,)*
        }

        impl Element {
            pub const ALL: &'static [Element] = &[$(Element::$variant,)*];

            /// Spelling used in RCF files.
            pub fn name(self) -> &'static str {
                match self {
                    $(Element::$variant => $name,)*
                }
            }

            pub fn dl_expressible(self) -> bool {
                match self {
                    $(Element::$variant => $dl,)*
                }
            }

            /// Whether findings of this element can be cured by adding
            /// triples, so that an open world only warrants a warning.
            pub fn cwa_dependent(self) -> bool {
                match self {
                    $(Element::$variant => $cwa,)*
                }
            }
        }

        impl FromStr for Element {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($name => Ok(Element::$variant),)*
                    _ => Err(s.to_string()),
                }
            }
        }
    };
}

elements! {
    SubclassOf => "subClassOf", dl: true, cwa: true;
    ClassEquiv => "classEquiv", dl: true, cwa: true;
    SubpropertyOf => "subPropertyOf", dl: true, cwa: true;
    PropertyEquiv => "propertyEquiv", dl: true, cwa: true;
    PropertyDisjoint => "propertyDisjoint", dl: true, cwa: false;
    ClassDisjoint => "classDisjoint", dl: true, cwa: false;
    Domain => "domain", dl: true, cwa: true;
    Range => "range", dl: true, cwa: true;
    Inverse => "inverse", dl: true, cwa: true;
    Symmetric => "symmetric", dl: true, cwa: true;
    Asymmetric => "asymmetric", dl: true, cwa: false;
    Reflexive => "reflexive", dl: true, cwa: true;
    Irreflexive => "irreflexive", dl: true, cwa: false;
    Transitive => "transitive", dl: true, cwa: true;
    Functional => "functional", dl: true, cwa: true;
    InverseFunctional => "inverseFunctional", dl: true, cwa: true;
    KeyFor => "keyFor", dl: true, cwa: true;
    Exists => "exists", dl: true, cwa: true;
    ForAll => "forAll", dl: true, cwa: false;
    MinCard => "minCard", dl: true, cwa: true;
    MaxCard => "maxCard", dl: true, cwa: false;
    ExactCard => "exactCard", dl: true, cwa: true;
    Intersection => "intersection", dl: true, cwa: true;
    Union => "union", dl: true, cwa: true;
    Negation => "negation", dl: true, cwa: false;
    Xor => "xor", dl: true, cwa: false;
    IndividualEq => "individualEq", dl: true, cwa: true;
    IndividualNeq => "individualNeq", dl: true, cwa: false;
    AssertionEq => "assertionEq", dl: true, cwa: true;
    AssertionNeq => "assertionNeq", dl: true, cwa: false;
    ValueRestriction => "valueRestriction", dl: true, cwa: true;
    AllowedValues => "allowedValues", dl: true, cwa: false;
    NotAllowedValues => "notAllowedValues", dl: true, cwa: false;
    VocabMembership => "vocabMembership", dl: true, cwa: true;
    Pattern => "pattern", dl: false, cwa: false;
    NegPattern => "negPattern", dl: false, cwa: false;
    FacetRange => "facetRange", dl: false, cwa: false;
    NegFacetRange => "negFacetRange", dl: false, cwa: false;
    Compare => "compare", dl: false, cwa: false;
    LangTag => "langTag", dl: false, cwa: true;
    LangTagCard => "langTagCard", dl: false, cwa: true;
    Whitespace => "whitespace", dl: false, cwa: false;
    HtmlFree => "htmlFree", dl: false, cwa: false;
    StringLength => "stringLength", dl: false, cwa: false;
    Ordered => "ordered", dl: false, cwa: true;
    DefaultValue => "defaultValue", dl: false, cwa: false;
    MathOp => "mathOp", dl: false, cwa: false;
    CountAgg => "countAgg", dl: false, cwa: false;
    Required => "required", dl: true, cwa: true;
    Optional => "optional", dl: true, cwa: false;
    Repeatable => "repeatable", dl: true, cwa: true;
    Recommended => "recommended", dl: false, cwa: true;
    Conditional => "conditional", dl: true, cwa: true;
    ValidClasses => "validClasses", dl: false, cwa: false;
    ValidProperties => "validProperties", dl: false, cwa: false;
    ValueValidForDatatype => "valueValidForDatatype", dl: false, cwa: false;
    NotRedundant => "notRedundant", dl: false, cwa: false;
    ListOp => "listOp", dl: false, cwa: false;
    Provenance => "provenance", dl: false, cwa: true;
    VocabularyOnly => "vocabularyOnly", dl: false, cwa: true;
    HttpUriScheme => "httpUriScheme", dl: false, cwa: false;
    CardShortcut => "cardShortcut", dl: true, cwa: true;
}

impl Element {
    /// Elements whose value must be a non-negative integer.
    pub fn needs_count(self) -> bool {
        matches!(
            self,
            Element::MinCard
                | Element::MaxCard
                | Element::ExactCard
                | Element::LangTagCard
                | Element::StringLength
        )
    }

    /// Elements that name a class and may therefore head a DEFINE row.
    pub fn definable(self) -> bool {
        use Element::*;
        matches!(
            self,
            Intersection
                | Union
                | Negation
                | Xor
                | Exists
                | ForAll
                | MinCard
                | MaxCard
                | ExactCard
                | ValueRestriction
                | AllowedValues
                | NotAllowedValues
                | Required
                | Repeatable
                | Pattern
                | NegPattern
                | FacetRange
                | NegFacetRange
                | StringLength
                | LangTag
                | ValueValidForDatatype
        )
    }

    /// Whether the class operands of this element occur under negation,
    /// which matters for stratifying recursive definitions.
    pub fn negative_operands(self) -> bool {
        use Element::*;
        matches!(
            self,
            Negation | Xor | MaxCard | ExactCard | NotAllowedValues | CardShortcut
        )
    }

    /// Severity used when a row does not state one.
    pub fn default_severity(self) -> super::Severity {
        match self {
            Element::Recommended => super::Severity::Info,
            _ => super::Severity::Error,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
