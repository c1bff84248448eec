"""
majorlab 主程序
矩阵优超 / log 凸性不等式的数值实验台：检查套件、探针、反例搜索
"""
import sys

from internal.cli import main

if __name__ == "__main__":
    sys.exit(main())
