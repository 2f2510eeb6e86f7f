import json
from unittest import TestCase

from jsonschema import Draft7Validator

from matherlift.app.catalog import get_example
from matherlift.app.chernring import GradedClass
from matherlift.app.exactmath import Ideal, ideals_equal
from matherlift.app.exceptions import InputInvalid
from matherlift.app.grassmann import Flag
from matherlift.app.json_schemas import (
    CONE_INPUT_SCHEMA,
    GRADED_CLASS_SCHEMA,
    HYPERSURFACE_SCHEMA,
    IDEAL_SCHEMA,
    POLYNOMIAL_SCHEMA,
)
from matherlift.app.utils import (
    cone_document,
    hypersurface_document,
    ideal_from_json,
    ideal_to_json,
    matrix_rows_from_json,
    matrix_rows_to_json,
    polynomial_from_json,
    polynomial_to_json,
)

CONIC = {
    "vars": ["x", "y", "z"],
    "terms": [{"c": "1", "e": [1, 0, 1]}, {"c": -1, "e": [0, 2, 0]}],
}


class TestSchemas(TestCase):
    """Input and output documents against their schemas."""

    def test_schemas_are_valid(self):
        """Every schema is itself a valid draft 7 schema."""
        for schema in (POLYNOMIAL_SCHEMA, IDEAL_SCHEMA, HYPERSURFACE_SCHEMA, CONE_INPUT_SCHEMA):
            Draft7Validator.check_schema(schema)

    def test_polynomial(self):
        """String and integer coefficients are both accepted."""
        Draft7Validator(POLYNOMIAL_SCHEMA).validate(CONIC)

    def test_bad_rational(self):
        """Coefficients must look like rationals."""
        document = {"vars": ["x"], "terms": [{"c": "1.5", "e": [1]}]}
        self.assertFalse(Draft7Validator(POLYNOMIAL_SCHEMA).is_valid(document))

    def test_negative_exponent(self):
        """Exponents are nonnegative."""
        document = {"vars": ["x"], "terms": [{"c": "1", "e": [-1]}]}
        self.assertFalse(Draft7Validator(POLYNOMIAL_SCHEMA).is_valid(document))

    def test_cone_input_extra_key(self):
        """Unknown keys in a cone document are rejected."""
        document = {"base_betti": [1, 0, 1], "middle_pd_rank": 0, "extra": 1}
        self.assertFalse(Draft7Validator(CONE_INPUT_SCHEMA).is_valid(document))

    def test_graded_class_output(self):
        """Serialized Chern classes match the output schema."""
        table = get_example("smooth_conic").table()
        cls = table.fundamental_class() + table.class_from({0: {"pt": 2}})
        Draft7Validator(GRADED_CLASS_SCHEMA).validate(json.loads(json.dumps(cls.to_json())))
        self.assertIsInstance(cls, GradedClass)


class TestDocuments(TestCase):
    """Parsing of validated documents."""

    def test_polynomial_from_json(self):
        """The conic parses and prints back to an equivalent document."""
        f = polynomial_from_json(CONIC)
        self.assertTrue(f.is_homogeneous)
        self.assertEqual(polynomial_from_json(polynomial_to_json(f)), f)

    def test_zero_denominator(self):
        """A zero denominator is an input error."""
        document = {"vars": ["x"], "terms": [{"c": "1/0", "e": [1]}]}
        with self.assertRaises(InputInvalid) as context:
            polynomial_from_json(document)
        self.assertEqual(context.exception.detail["errors"][0]["code"], "INPUT_INVALID")

    def test_exponent_length(self):
        """Exponent vectors have one entry per variable."""
        document = {"vars": ["x", "y"], "terms": [{"c": "1", "e": [1]}]}
        with self.assertRaises(InputInvalid):
            polynomial_from_json(document)

    def test_schema_error_names_path(self):
        """Schema violations report where they happened."""
        with self.assertRaises(InputInvalid) as context:
            hypersurface_document({"name": "bad", "f": {"vars": ["x"]}})
        self.assertIn("terms", context.exception.detail["errors"][0]["detail"]["reason"])

    def test_flag_rows(self):
        """Flag rows are parsed as rationals."""
        self.assertEqual(matrix_rows_from_json([["1/2", 0], [0, "3"]]), [[0.5, 0], [0, 3]])

    def test_cone_document(self):
        """Cone documents become a Betti tuple and a rank."""
        self.assertEqual(
            cone_document({"base_betti": [1, 0, 1], "middle_pd_rank": 0}), ((1, 0, 1), 0)
        )

    def test_flag_round_trip(self):
        """A flag document reads back into the same flag."""
        flag = Flag.from_json([["1/2", 0, 0], [0, 1, 0], [0, 0, "-3"]])
        self.assertEqual(flag.to_json(), [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0", "-3"]])
        self.assertEqual(matrix_rows_to_json(flag.basis), flag.to_json())
        self.assertEqual(Flag.from_json(flag.to_json()), flag)


class TestIdealDocuments(TestCase):
    """Ideals as arrays of polynomials or as objects with their variables."""

    def setUp(self):
        self.conic = polynomial_from_json(CONIC)

    def test_array_form(self):
        """A bare array of polynomials is an ideal."""
        ideal = ideal_from_json([CONIC])
        self.assertEqual(ideal.ambient, ("x", "y", "z"))
        self.assertEqual(ideal.generators, (self.conic,))

    def test_object_form(self):
        """The object form carries its variables, so it may be empty."""
        ideal = ideal_from_json({"vars": ["x", "y", "z"], "generators": []})
        self.assertEqual(ideal.ambient, ("x", "y", "z"))
        self.assertEqual(ideal.generators, ())
        self.assertEqual(ideal_from_json({"vars": CONIC["vars"], "generators": [CONIC]}).generators,
                         (self.conic,))

    def test_output_is_array_form(self):
        """Ideals are written as arrays and read back unchanged."""
        ideal = Ideal(("x", "y", "z"), [self.conic])
        document = ideal_to_json(ideal)
        Draft7Validator(IDEAL_SCHEMA).validate(document)
        self.assertIsInstance(document, list)
        self.assertTrue(ideals_equal(ideal_from_json(document), ideal))

    def test_empty_array_needs_variables(self):
        """An empty array only names a ring when the variables are given."""
        with self.assertRaises(InputInvalid):
            ideal_from_json([])
        self.assertEqual(ideal_from_json([], variables=("x", "y")).ambient, ("x", "y"))

    def test_mixed_variables(self):
        """Generators must share the ring."""
        line = {"vars": ["x", "y"], "terms": [{"c": "1", "e": [1, 0]}]}
        with self.assertRaises(InputInvalid):
            ideal_from_json([CONIC, line])

    def test_neither_form(self):
        """Other shapes are schema violations."""
        with self.assertRaises(InputInvalid):
            ideal_from_json({"generators": [CONIC]})
