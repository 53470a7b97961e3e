// Generated from the constraint type tables; edit with care.

use super::{Complexity, ContextDim, Support::*};
use crate::model::Element::{self, *};

pub(super) struct Row {
    pub name: &'static str,
    pub requirements: &'static [&'static str],
    pub context: ContextDim,
    pub complexity: Complexity,
    pub dl: bool,
    pub cwa: bool,
    pub una: bool,
    pub inference: bool,
    pub support: [super::Support; 6],
    pub elements: &'static [Element],
}

pub(super) const ROWS: &[Row] = &[
    Row {
        name: "Subsumption",
        requirements: &["R-100-SUBSUMPTION"],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, Partial, Yes, Yes],
        elements: &[SubclassOf],
    },
    Row {
        name: "Class Equivalence",
        requirements: &["R-3-EQUIVALENT-CLASSES"],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[ClassEquiv],
    },
    Row {
        name: "Sub Properties",
        requirements: &["R-54-SUB-OBJECT-PROPERTIES", "R-54-SUB-DATA-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[SubpropertyOf],
    },
    Row {
        name: "Property Domains",
        requirements: &["R-25-OBJECT-PROPERTY-DOMAIN", "R-26-DATA-PROPERTY-DOMAIN"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Domain],
    },
    Row {
        name: "Property Ranges",
        requirements: &["R-28-OBJECT-PROPERTY-RANGE", "R-35-DATA-PROPERTY-RANGE"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Range],
    },
    Row {
        name: "Inverse Object Properties",
        requirements: &["R-56-INVERSE-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, Partial, No, Yes],
        elements: &[Inverse],
    },
    Row {
        name: "Symmetric Object Properties",
        requirements: &["R-61-SYMMETRIC-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Symmetric],
    },
    Row {
        name: "Asymmetric Object Properties",
        requirements: &["R-62-ASYMMETRIC-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: false,
        una: false,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Asymmetric],
    },
    Row {
        name: "Reflexive Object Properties",
        requirements: &["R-59-REFLEXIVE-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Reflexive],
    },
    Row {
        name: "Irreflexive Object Properties",
        requirements: &["R-60-IRREFLEXIVE-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: false,
        una: false,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[Irreflexive],
    },
    Row {
        name: "Disjoint Properties",
        requirements: &["R-9-DISJOINT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[PropertyDisjoint],
    },
    Row {
        name: "Disjoint Classes",
        requirements: &["R-7-DISJOINT-CLASSES"],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[ClassDisjoint],
    },
    Row {
        name: "Context-Specific Property Groups",
        requirements: &["R-66-PROPERTY-GROUPS"],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [No, Partial, Partial, Yes, Yes, Yes],
        elements: &[Intersection, MinCard, MaxCard],
    },
    Row {
        name: "Context-Specific Inclusive OR of Properties",
        requirements: &["R-202-CONTEXT-SPECIFIC-INCLUSIVE-OR-OF-PROPERTIES"],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [No, Partial, Partial, No, No, Yes],
        elements: &[Union, ExactCard],
    },
    Row {
        name: "Context-Specific Inclusive OR of Property Groups",
        requirements: &[],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [No, Partial, Partial, No, No, Yes],
        elements: &[Union, Intersection],
    },
    Row {
        name: "Recursive Queries",
        requirements: &["R-222-RECURSIVE-QUERIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: false,
        inference: false,
        support: [Yes, Yes, Yes, Yes, Yes, Partial],
        elements: &[MinCard],
    },
    Row {
        name: "Individual Inequality",
        requirements: &[],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[IndividualNeq],
    },
    Row {
        name: "Equivalent Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[PropertyEquiv],
    },
    Row {
        name: "Property Assertions",
        requirements: &["R-96-PROPERTY-ASSERTIONS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [No, Yes, Partial, No, No, Yes],
        elements: &[AssertionEq, AssertionNeq],
    },
    Row {
        name: "Data Property Facets",
        requirements: &["R-46-CONSTRAINING-FACETS"],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, Yes, No, No, Yes],
        elements: &[FacetRange, Pattern, StringLength],
    },
    Row {
        name: "Literal Pattern Matching",
        requirements: &["R-44-PATTERN-MATCHING-ON-RDF-LITERALS"],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Pattern],
    },
    Row {
        name: "Negative Literal Pattern Matching",
        requirements: &["R-44-PATTERN-MATCHING-ON-RDF-LITERALS"],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, No, No, No, Yes],
        elements: &[NegPattern],
    },
    Row {
        name: "Object Property Paths",
        requirements: &["R-55-OBJECT-PROPERTY-PATHS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[SubpropertyOf],
    },
    Row {
        name: "Intersection",
        requirements: &[
            "R-15-CONJUNCTION-OF-CLASS-EXPRESSIONS",
            "R-16-CONJUNCTION-OF-DATA-RANGES",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, Yes, Yes, Yes],
        elements: &[Intersection],
    },
    Row {
        name: "Disjunction",
        requirements: &[
            "R-17-DISJUNCTION-OF-CLASS-EXPRESSIONS",
            "R-18-DISJUNCTION-OF-DATA-RANGES",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Union],
    },
    Row {
        name: "Negation",
        requirements: &[
            "R-19-NEGATION-OF-CLASS-EXPRESSIONS",
            "R-20-NEGATION-OF-DATA-RANGES",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: false,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Negation],
    },
    Row {
        name: "Existential Quantifications",
        requirements: &["R-86-EXISTENTIAL-QUANTIFICATION-ON-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, Partial, Partial, Yes],
        elements: &[Exists],
    },
    Row {
        name: "Universal Quantifications",
        requirements: &["R-91-UNIVERSAL-QUANTIFICATION-ON-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[ForAll],
    },
    Row {
        name: "Minimum Unqualified Cardinality",
        requirements: &[
            "R-81-MINIMUM-UNQUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[MinCard],
    },
    Row {
        name: "Minimum Qualified Cardinality",
        requirements: &[
            "R-75-MINIMUM-QUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[MinCard],
    },
    Row {
        name: "Maximum Unqualified Cardinality",
        requirements: &[
            "R-82-MAXIMUM-UNQUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[MaxCard],
    },
    Row {
        name: "Maximum Qualified Cardinality",
        requirements: &[
            "R-76-MAXIMUM-QUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[MaxCard],
    },
    Row {
        name: "Exact Unqualified Cardinality",
        requirements: &[
            "R-80-EXACT-UNQUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[ExactCard, MinCard, MaxCard],
    },
    Row {
        name: "Exact Qualified Cardinality",
        requirements: &[
            "R-74-EXACT-QUALIFIED-CARDINALITY-ON-PROPERTIES",
            "R-211-CARDINALITY-CONSTRAINTS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Partial, Yes, Yes],
        elements: &[ExactCard, MinCard, MaxCard],
    },
    Row {
        name: "Transitive Object Properties",
        requirements: &["R-63-TRANSITIVE-OBJECT-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Transitive],
    },
    Row {
        name: "Context-Specific Exclusive OR of Properties",
        requirements: &["R-11-CONTEXT-SPECIFIC-EXCLUSIVE-OR-OF-PROPERTIES"],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [No, Yes, No, No, Yes, Yes],
        elements: &[Xor],
    },
    Row {
        name: "Context-Specific Exclusive OR of Property Groups",
        requirements: &["R-13-DISJOINT-GROUP-OF-PROPERTIES-CLASS-SPECIFIC"],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [No, Partial, No, Yes, Yes, Yes],
        elements: &[Xor, Intersection],
    },
    Row {
        name: "Allowed Values",
        requirements: &[
            "R-30-ALLOWED-VALUES-FOR-RDF-OBJECTS",
            "R-37-ALLOWED-VALUES-FOR-RDF-LITERALS",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[AllowedValues],
    },
    Row {
        name: "Not Allowed Values",
        requirements: &[
            "R-33-NEGATIVE-OBJECT-CONSTRAINTS",
            "R-200-NEGATIVE-LITERAL-CONSTRAINTS",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [No, Yes, No, No, Yes, Yes],
        elements: &[NotAllowedValues],
    },
    Row {
        name: "Literal Ranges",
        requirements: &["R-45-RANGES-OF-RDF-LITERAL-VALUES"],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, No, No, No, Yes],
        elements: &[FacetRange],
    },
    Row {
        name: "Negative Literal Ranges",
        requirements: &["R-142-NEGATIVE-RANGES-OF-RDF-LITERAL-VALUES"],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, Yes, No, No, No, Yes],
        elements: &[NegFacetRange],
    },
    Row {
        name: "Required Properties",
        requirements: &["R-68-REQUIRED-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[Required],
    },
    Row {
        name: "Optional Properties",
        requirements: &["R-69-OPTIONAL-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: false,
        una: false,
        inference: false,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[Optional],
    },
    Row {
        name: "Repeatable Properties",
        requirements: &["R-70-REPEATABLE-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: false,
        inference: false,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[Repeatable],
    },
    Row {
        name: "Negative Property Constraints",
        requirements: &[
            "R-52-NEGATIVE-OBJECT-PROPERTY-CONSTRAINTS",
            "R-53-NEGATIVE-DATA-PROPERTY-CONSTRAINTS",
        ],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: false,
        una: true,
        inference: false,
        support: [No, Yes, No, No, Yes, Yes],
        elements: &[Negation, Exists],
    },
    Row {
        name: "Individual Equality",
        requirements: &[],
        context: ContextDim::Class,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: false,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[IndividualEq],
    },
    Row {
        name: "Functional Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Functional],
    },
    Row {
        name: "Inverse-Functional Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[InverseFunctional],
    },
    Row {
        name: "Value Restrictions",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[ValueRestriction],
    },
    Row {
        name: "Self Restrictions",
        requirements: &[],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Exists],
    },
    Row {
        name: "Primary Key Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[KeyFor, InverseFunctional],
    },
    Row {
        name: "Class-Specific Property Range",
        requirements: &[
            "R-29-CLASS-SPECIFIC-RANGE-OF-RDF-OBJECTS",
            "R-36-CLASS-SPECIFIC-RANGE-OF-RDF-LITERALS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [Yes, Yes, No, Yes, Yes, Yes],
        elements: &[Range],
    },
    Row {
        name: "Class-Specific Reflexive Object Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Reflexive],
    },
    Row {
        name: "Membership in Controlled Vocabularies",
        requirements: &[
            "R-32-MEMBERSHIP-OF-RDF-OBJECTS-IN-CONTROLLED-VOCABULARIES",
            "R-39-MEMBERSHIP-OF-RDF-LITERALS-IN-CONTROLLED-VOCABULARIES",
        ],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [Yes, No, No, No, No, Yes],
        elements: &[VocabMembership],
    },
    Row {
        name: "IRI Pattern Matching",
        requirements: &[
            "R-21-IRI-PATTERN-MATCHING-ON-RDF-SUBJECTS",
            "R-22-IRI-PATTERN-MATCHING-ON-RDF-OBJECTS",
            "R-23-IRI-PATTERN-MATCHING-ON-RDF-PROPERTIES",
        ],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: true,
        inference: false,
        support: [No, No, No, No, Yes, Yes],
        elements: &[Pattern],
    },
    Row {
        name: "Literal Value Comparison",
        requirements: &["R-43-LITERAL-VALUE-COMPARISON"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, Yes, Yes],
        elements: &[Compare],
    },
    Row {
        name: "Ordering",
        requirements: &[
            "R-121-SPECIFY-ORDER-OF-RDF-RESOURCES",
            "R-217-DEFINE-ORDER-FOR-FORMS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[Ordered],
    },
    Row {
        name: "Validation Levels",
        requirements: &[
            "R-205-VARYING-LEVELS-OF-ERROR",
            "R-135-CONSTRAINT-LEVELS",
            "R-158-SEVERITY-LEVELS-OF-CONSTRAINT-VIOLATIONS",
            "R-193-MULTIPLE-CONSTRAINT-VALIDATION-EXECUTION-LEVELS",
        ],
        context: ContextDim::Both,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[],
    },
    Row {
        name: "String Operations",
        requirements: &["R-194-PROVIDE-STRING-FUNCTIONS-FOR-RDF-LITERALS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[StringLength],
    },
    Row {
        name: "Context-Specific Valid Classes",
        requirements: &["R-209-VALID-CLASSES"],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[ValidClasses],
    },
    Row {
        name: "Context-Specific Valid Properties",
        requirements: &["R-210-VALID-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[ValidProperties],
    },
    Row {
        name: "Default Values",
        requirements: &[
            "R-31-DEFAULT-VALUES-OF-RDF-OBJECTS",
            "R-38-DEFAULT-VALUES-OF-RDF-LITERALS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: true,
        inference: true,
        support: [No, No, No, Yes, No, Yes],
        elements: &[DefaultValue],
    },
    Row {
        name: "Mathematical Operations",
        requirements: &[
            "R-42-MATHEMATICAL-OPERATIONS",
            "R-41-STATISTICAL-COMPUTATIONS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[MathOp],
    },
    Row {
        name: "Language Tag Matching",
        requirements: &["R-47-LANGUAGE-TAG-MATCHING"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[LangTag],
    },
    Row {
        name: "Language Tag Cardinality",
        requirements: &[
            "R-49-RDF-LITERALS-HAVING-AT-MOST-ONE-LANGUAGE-TAG",
            "R-48-MISSING-LANGUAGE-TAGS",
        ],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[LangTagCard],
    },
    Row {
        name: "Whitespace Handling",
        requirements: &["R-50-WHITESPACE-HANDLING-OF-RDF-LITERALS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[Whitespace],
    },
    Row {
        name: "HTML Handling",
        requirements: &["R-51-HTML-HANDLING-OF-RDF-LITERALS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[HtmlFree],
    },
    Row {
        name: "Conditional Properties",
        requirements: &["R-71-CONDITIONAL-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[Conditional],
    },
    Row {
        name: "Recommended Properties",
        requirements: &["R-72-RECOMMENDED-PROPERTIES"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[Recommended],
    },
    Row {
        name: "Handle RDF Collections",
        requirements: &["R-120-HANDLE-RDF-COLLECTIONS"],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[ListOp],
    },
    Row {
        name: "Value is Valid for Datatype",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[ValueValidForDatatype],
    },
    Row {
        name: "Use Sub-Super Relations in Validation",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[NotRedundant],
    },
    Row {
        name: "Cardinality Shortcuts",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: true,
        cwa: true,
        una: true,
        inference: true,
        support: [No, Yes, No, Yes, Yes, Yes],
        elements: &[CardShortcut],
    },
    Row {
        name: "Aggregations",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: false,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[CountAgg],
    },
    Row {
        name: "Class-Specific Irreflexive Object Properties",
        requirements: &[],
        context: ContextDim::Property,
        complexity: Complexity::Sugar,
        dl: true,
        cwa: false,
        una: true,
        inference: true,
        support: [No, Yes, No, No, No, Yes],
        elements: &[Irreflexive],
    },
    Row {
        name: "Provenance",
        requirements: &[],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[Provenance],
    },
    Row {
        name: "Data Model Consistency",
        requirements: &[],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[],
    },
    Row {
        name: "Structure",
        requirements: &[],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[],
    },
    Row {
        name: "Labeling and Documentation",
        requirements: &[],
        context: ContextDim::Both,
        complexity: Complexity::Complex,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[],
    },
    Row {
        name: "Vocabulary",
        requirements: &[],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: true,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[VocabularyOnly],
    },
    Row {
        name: "HTTP URI Scheme Violation",
        requirements: &[],
        context: ContextDim::Class,
        complexity: Complexity::Simple,
        dl: false,
        cwa: false,
        una: true,
        inference: false,
        support: [No, No, No, No, No, Yes],
        elements: &[HttpUriScheme],
    },
];
