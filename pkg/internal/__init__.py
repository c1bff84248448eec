"""
Internal 内部模块包
"""

