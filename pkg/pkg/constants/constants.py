"""
全局常量配置

环境变量优先（.env / 进程环境），其余数值默认值在 internal/config/config.toml 中
"""
import os
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

# ==================== 版本 ====================
ARTIFACT_VERSION = "majorlab-1.0.0"

# ==================== 随机种子 ====================
# CLI 未显式传 --seed 时使用的默认种子
MAJORLAB_SEED = int(os.getenv("MAJORLAB_SEED", "0"))

# ==================== 并发配置 ====================
# 默认工作线程数（--jobs 未指定时）
MAJORLAB_JOBS = int(os.getenv("MAJORLAB_JOBS", "1"))

# ==================== 日志配置 ====================
# 控制台日志级别: DEBUG / INFO / WARNING / ERROR
MAJORLAB_LOG_LEVEL = os.getenv("MAJORLAB_LOG_LEVEL", "INFO").upper()

# 是否写入 json_log/ 文件（测试和 CI 中可以关闭）
MAJORLAB_LOG_FILE = os.getenv("MAJORLAB_LOG_FILE", "1") == "1"

# ==================== 配置文件 ====================
# 可选：覆盖默认的 internal/config/config.toml 路径
MAJORLAB_CONFIG = os.getenv("MAJORLAB_CONFIG", "")

# ==================== 退出码 ====================
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
