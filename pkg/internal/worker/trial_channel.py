"""
TrialChannel - 基于 Python Queue 的单机试验队列

独立任务（套件试验、网格点、搜索重启）入队，由守护消费者线程执行；
结果按提交顺序返回，与调度顺序无关。jobs=1 时直接在当前线程顺序执行。
"""
import queue
import threading
from typing import Any, Callable, Dict, List, Optional, Sequence

from log import logger
from pkg.constants import MAJORLAB_JOBS

_STOP = object()


class TrialChannel:
    """试验队列（每次运行一个实例）"""

    def __init__(self, jobs: Optional[int] = None):
        self.jobs = max(1, int(jobs or MAJORLAB_JOBS))
        self.consumers: List[threading.Thread] = []

    def run(self, tasks: Sequence[Callable[[], Any]]) -> List[Any]:
        """
        执行全部任务

        Args:
            tasks: 无参可调用对象列表

        Returns:
            List: 与 tasks 同序的结果

        Raises:
            任务中抛出的第一个异常（按提交顺序）
        """
        tasks = list(tasks)
        if self.jobs == 1 or len(tasks) <= 1:
            return [task() for task in tasks]

        # 每次运行一个新队列，残留的停止哨兵不会影响下一次
        channel: "queue.Queue" = queue.Queue()
        results: List[Any] = [None] * len(tasks)
        errors: Dict[int, BaseException] = {}
        num_consumers = min(self.jobs, len(tasks))

        self.consumers = []
        for i in range(num_consumers):
            consumer_thread = threading.Thread(
                target=self._consume_loop,
                args=(channel, results, errors, i),
                daemon=True,
                name=f"TrialConsumer-{i}"
            )
            consumer_thread.start()
            self.consumers.append(consumer_thread)
        logger.debug(f"已启动 {num_consumers} 个消费者线程", tasks=len(tasks))

        for index, task in enumerate(tasks):
            channel.put((index, task))
        for _ in range(num_consumers):
            channel.put(_STOP)

        for consumer in self.consumers:
            consumer.join()

        if errors:
            first = min(errors)
            raise errors[first]
        return results

    @staticmethod
    def _consume_loop(channel: "queue.Queue", results: List[Any], errors: Dict[int, BaseException], consumer_id: int):
        """消费者循环：取任务、执行、写回结果槽位"""
        while True:
            item = channel.get()
            if item is _STOP:
                return
            index, task = item
            try:
                results[index] = task()
            except Exception as e:
                errors[index] = e
                logger.debug(f"消费者 {consumer_id} 任务失败", index=index, error=str(e))
            except BaseException as e:
                # 中断类异常：记下后结束本消费者，由主线程重新抛出
                errors[index] = e
                return


def run_tasks(tasks: Sequence[Callable[[], Any]], jobs: Optional[int] = None) -> List[Any]:
    """便捷函数：用一次性 TrialChannel 执行任务"""
    return TrialChannel(jobs).run(tasks)
