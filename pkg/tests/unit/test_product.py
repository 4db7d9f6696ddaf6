"""Tests for product-code block encoding and validity."""

import numpy as np
import pytest

from prodfec.core import product
from prodfec.core.errors import CodeLengthError
from prodfec.core.models import PRODUCT_RATE
from tests.fixtures.blocks import clean_block


class TestEncodeBlock:
    def test_all_zero_info(self) -> None:
        block = product.encode_block(np.zeros((231, 231), dtype=np.uint8))
        assert block.shape == (255, 255)
        assert not block.any()

    def test_row_and_column_order_agree(self, rng: np.random.Generator) -> None:
        for _ in range(100):
            info = product.random_info_block(rng)
            np.testing.assert_array_equal(
                product.encode_block(info), product.encode_block_columns_first(info)
            )

    def test_output_is_valid_and_systematic(self, rng: np.random.Generator) -> None:
        info, block = clean_block(rng)
        assert product.is_valid_block(block)
        np.testing.assert_array_equal(product.extract_systematic(block), info)

    def test_linearity(self, rng: np.random.Generator) -> None:
        a = product.random_info_block(rng)
        b = product.random_info_block(rng)
        np.testing.assert_array_equal(
            product.encode_block(a) ^ product.encode_block(b), product.encode_block(a ^ b)
        )

    def test_wrong_shape(self) -> None:
        with pytest.raises(CodeLengthError):
            product.encode_block(np.zeros((231, 230), dtype=np.uint8))


class TestValidity:
    def test_all_zero_block_is_valid(self) -> None:
        assert product.is_valid_block(np.zeros((255, 255), dtype=np.uint8))

    def test_single_flip_breaks_one_row_and_one_column(self, rng: np.random.Generator) -> None:
        _, block = clean_block(rng)
        block[40, 250] ^= 1
        assert not product.is_valid_block(block)
        np.testing.assert_array_equal(np.flatnonzero(product.row_syndrome_flags(block)), [40])
        np.testing.assert_array_equal(np.flatnonzero(product.column_syndrome_flags(block)), [250])

    def test_wrong_shape(self) -> None:
        with pytest.raises(CodeLengthError):
            product.is_valid_block(np.zeros((255, 254), dtype=np.uint8))


class TestCodeParameters:
    def test_values(self) -> None:
        params = product.code_parameters()
        assert (params.n, params.k, params.t) == (255, 231, 3)
        assert params.block_bits == 65025
        assert params.info_bits == 53361
        assert params.rate == pytest.approx(0.82063, abs=1e-5)
        assert params.overhead == pytest.approx(0.2186, abs=1e-4)
        assert params.rate == PRODUCT_RATE
