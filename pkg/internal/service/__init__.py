"""
服务层
包含以下模块：
- run: 运行服务（套件 / 探针 / 搜索 / 演示分派）与报告输出
"""
