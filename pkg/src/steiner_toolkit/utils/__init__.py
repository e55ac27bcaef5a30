"""Utility functions and helpers for Steiner Toolkit."""

from .bits import closure, is_connected_mask, iter_bits, k_subset_masks, mask_of
from .embedding import spanning_embeds

__all__ = [
    "closure",
    "is_connected_mask",
    "iter_bits",
    "k_subset_masks",
    "mask_of",
    "spanning_embeds",
]
