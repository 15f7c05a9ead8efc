"""
Numeric 模組 - Euler's totient and the density constant
"""

from .totient import ConstantEstimate, density_constant, euler_phi, totient_sieve

__all__ = ['ConstantEstimate', 'density_constant', 'euler_phi', 'totient_sieve']
