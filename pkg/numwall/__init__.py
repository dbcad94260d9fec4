"""
Compute number walls of integer and modular sequences, cross their zero
windows exactly, and study the walls of the Pagoda family
"""

__version__ = '0.1'
