import asyncio
import logging
import multiprocessing
from dataclasses import dataclass
from typing import Optional

import async_timeout

from .colouring import build, case_for, spectrum_range
from .core import ConstructionCase
from .exceptions import CheckTimeout, FourCycleException
from .verifier import VerificationReport, verify_all

logger = logging.getLogger('fourcycle')


@dataclass(frozen=True)
class CheckResult:
    c: int
    case: ConstructionCase
    report: Optional[VerificationReport] = None
    error: Optional[Exception] = None

    @property
    def passed(self):
        return self.error is None and self.report is not None and self.report.passed


def build_and_verify(s, h, c):
    try:
        colsys = build(s, h, c)
    except FourCycleException as e:
        return CheckResult(c, case_for(s, c), error=e)
    return CheckResult(c, colsys.construction_case, report=verify_all(colsys))


def _settle(future, result=None, error=None):
    if future.done():
        return
    if error is not None:
        future.set_exception(error)
    else:
        future.set_result(result)


class SpectrumChecker(object):
    """
    Build and verify every ``c`` of ``spectrum_range(s, h)``. The builds run
    concurrently; results always come back ordered by ``c``.

    Without an ``executor`` the checker owns a pool of ``workers`` processes
    and terminates it on close, which also stops builds that ran out of time.
    A given ``executor`` is used as is and left open.

    :arg timeout: seconds allowed for one build and its verification
    """
    def __init__(self, s, h, executor=None, timeout=None, loop=None, workers=None):
        self.s, self.h = s, h
        self.timeout = timeout
        self.loop = loop
        self.executor = executor
        self.pool = multiprocessing.Pool(workers) if executor is None else None
        self.spectrum = spectrum_range(s, h)

    async def __aenter__(self):
        return self

    async def __aexit__(self, _exc_type, _exc_val, _exc_tb):
        await self.close()

    async def close(self):
        if self.pool is not None:
            self.pool.terminate()
            self.pool.join()
            self.pool = None

    def _get_loop(self):
        return self.loop if self.loop is not None else asyncio.get_running_loop()

    def _submit(self, loop, c):
        if self.executor is not None:
            return loop.run_in_executor(self.executor, build_and_verify, self.s, self.h, c)
        future = loop.create_future()
        self.pool.apply_async(
            build_and_verify, (self.s, self.h, c),
            callback=lambda result: loop.call_soon_threadsafe(_settle, future, result),
            error_callback=lambda e: loop.call_soon_threadsafe(_settle, future, None, e))
        return future

    async def check(self, c):
        loop = self._get_loop()
        start = loop.time()
        try:
            async with async_timeout.timeout(self.timeout):
                result = await self._submit(loop, c)
        except asyncio.TimeoutError as e:
            duration = loop.time() - start
            logger.warning('check s=%d h=%d c=%d timed out after %.3fs', self.s, self.h, c, duration)
            error = CheckTimeout('TIMEOUT', 'c=%d exceeded %ss' % (c, self.timeout), e)
            return CheckResult(c, case_for(self.s, c), error=error)

        duration = loop.time() - start
        if result.passed:
            logger.info('check s=%d h=%d c=%d [%s] passed in %.3fs', self.s, self.h, c, result.case, duration)
        else:
            logger.warning('check s=%d h=%d c=%d [%s] failed in %.3fs: %s', self.s, self.h, c, result.case,
                           duration, result.error or result.report.first_failure())
        return result

    async def check_all(self):
        tasks = [asyncio.ensure_future(self.check(c)) for c in self.spectrum]
        results = {}
        pending = set(tasks)
        try:
            while pending:
                done, pending = await asyncio.wait(pending, return_when=asyncio.FIRST_COMPLETED)
                # read every finished task before raising the first error
                errors = [task.exception() for task in done if task.exception() is not None]
                for task in done:
                    if task.exception() is None:
                        result = task.result()
                        results[result.c] = result
                if errors:
                    raise errors[0]
        finally:
            # clean up pending futures
            for task in pending:
                task.cancel()
        return [results[c] for c in self.spectrum]


def check_spectrum(s, h, timeout=None, workers=None):
    """ Synchronous entry point used by the command line. """
    async def run():
        async with SpectrumChecker(s, h, timeout=timeout, workers=workers) as checker:
            return await checker.check_all()
    return asyncio.run(run())
