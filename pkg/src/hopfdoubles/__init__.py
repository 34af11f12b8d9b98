"""Exact braided Drinfeld and Heisenberg doubles."""
