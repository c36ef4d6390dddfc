"""
Worker class that all workers should implement
"""
import traceback
import threading
import time
import abc

from common.lib.exceptions import WorkerInterruptedException


class BasicWorker(threading.Thread, metaclass=abc.ABCMeta):
	"""
	Abstract Worker class

	This runs as a separate thread in which a worker method is executed. The
	work method can do whatever the worker needs to do - that part is to be
	implemented by a child class. This class provides scaffolding that makes
	sure crashes are caught properly; the exception is kept so the manager
	can raise it again in the main thread.
	"""
	#: Worker type
	type = "misc"

	#: Flag value to indicate worker interruption type - not interrupted
	INTERRUPT_NONE = False

	#: Flag value to indicate worker interruption type - interrupted, results
	#: are discarded
	INTERRUPT_CANCEL = 1

	#: Logger object
	log = None

	#: ShardManager that manages this worker
	manager = None

	#: Interrupt status, one of the `INTERRUPT_` class constants
	interrupted = False

	#: Exception that ended the worker, if any
	error = None

	#: Unix timestamp at which this worker was started
	init_time = 0

	def __init__(self, logger, manager=None):
		"""
		Worker init

		:param Logger logger:  Logging interface
		:param ShardManager manager:  Manager instance that started this worker
		"""
		super().__init__()
		self.name = self.type
		self.log = logger
		self.manager = manager
		self.interrupted = self.INTERRUPT_NONE
		self.error = None
		self.init_time = int(time.time())

	def run(self):
		"""
		Run the worker

		This calls the `work()` method, quite simply, but adds some
		scaffolding to take care of any exceptions that occur during the
		execution of the worker. The exception is logged with its location
		and stored in `error`.
		"""
		try:
			self.work()
		except WorkerInterruptedException as e:
			self.log.info("Worker %s interrupted - cancelling." % self.name)
			self.error = e
			self.abort()
		except Exception as e:
			frames = traceback.extract_tb(e.__traceback__)
			frames = [frame.filename.split("/").pop() + ":" + str(frame.lineno) for frame in frames]
			location = "->".join(frames)
			self.log.error("Worker %s raised exception %s and will abort: %s at %s" % (self.name, e.__class__.__name__, str(e), location))
			self.error = e

	def abort(self):
		"""
		Called when the worker is interrupted

		Workers can override this to clean up; by default this does nothing.
		"""
		pass

	def request_interrupt(self, level=INTERRUPT_CANCEL):
		"""
		Set the 'abort requested' flag

		Child workers should quit at their earliest convenience when this is
		set. This can be done simply by checking the value of
		`self.interrupted`.

		:param int level:  Interrupt level
		"""
		self.log.debug("Interrupt requested for worker %s" % self.name)
		self.interrupted = level

	@abc.abstractmethod
	def work(self):
		"""
		This is where the actual work happens
		"""
		pass
