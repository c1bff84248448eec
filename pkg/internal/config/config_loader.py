"""
配置文件加载器
从 config.toml 读取配置（可通过 MAJORLAB_CONFIG 指定其他路径）
"""
import toml
from pathlib import Path
from typing import Dict, Any, Optional

from log import logger
from pkg.constants import MAJORLAB_CONFIG
from pkg.errors import ConfigError


class ConfigLoader:
    """配置加载器（单例模式）"""

    _instance: Optional['ConfigLoader'] = None
    _config: Optional[Dict[str, Any]] = None
    _config_path: Optional[Path] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._config is None:
            self._load_config()

    def _load_config(self):
        """加载配置文件"""
        if MAJORLAB_CONFIG:
            self._config_path = Path(MAJORLAB_CONFIG)
        else:
            self._config_path = Path(__file__).parent / "config.toml"

        if not self._config_path.exists():
            logger.error(f"配置文件不存在: {self._config_path}")
            raise ConfigError("配置文件不存在", path=self._config_path)

        try:
            with open(self._config_path, 'r', encoding='utf-8') as f:
                self._config = toml.load(f)
            logger.debug(f"配置文件加载成功: {self._config_path}")
        except toml.TomlDecodeError as e:
            logger.error(f"配置文件解析失败: {e}", exc_info=True)
            raise ConfigError("配置文件解析失败", path=self._config_path, reason=e)

    @property
    def tolerance_config(self) -> Dict[str, Any]:
        """容差策略配置"""
        return self._config.get('tolerance', {})

    @property
    def eigen_config(self) -> Dict[str, Any]:
        """特征分解配置"""
        return self._config.get('eigen', {})

    @property
    def suite_config(self) -> Dict[str, Any]:
        """检查套件配置"""
        return self._config.get('suite', {})

    @property
    def search_config(self) -> Dict[str, Any]:
        """搜索配置"""
        return self._config.get('search', {})

    @property
    def probe_config(self) -> Dict[str, Any]:
        """探针配置"""
        return self._config.get('probe', {})

    @property
    def report_config(self) -> Dict[str, Any]:
        """报告配置"""
        return self._config.get('report', {})

    @property
    def monitor_config(self) -> Dict[str, Any]:
        """性能监控配置"""
        return self._config.get('monitor', {})


# 创建全局配置实例
config = ConfigLoader()
