"""
Pkg 包模块
"""

