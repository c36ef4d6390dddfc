"""
Log handler
"""
import logging
import sys

from pathlib import Path
from logging.handlers import RotatingFileHandler

import config


class Logger:
	"""
	Logger

	Sets up a rotating logger that writes to a log file. Messages can also be
	echoed to stderr; stdout is reserved for command reports.
	"""
	logger = None
	log_path = None
	print_logs = False
	levels = {
		"DEBUG": logging.DEBUG,
		"INFO": logging.INFO,
		"WARNING": logging.WARNING,
		"ERROR": logging.ERROR,
		"CRITICAL": logging.CRITICAL,
		"FATAL": logging.FATAL
	}

	def __init__(self, output=False, filename="mealybench.log"):
		"""
		Set up log handler

		:param bool output:  Whether to echo logs to stderr
		:param str filename:  Name of the log file within the log folder
		"""
		self.print_logs = output
		self.log_path = Path(config.PATH_ROOT, config.PATH_LOGS, filename)

		self.logger = logging.getLogger("mealybench")
		self.logger.setLevel(self.levels.get(config.LOG_LEVEL, logging.INFO))

		# handlers are shared between Logger instances, since the underlying
		# logging.Logger is a singleton
		if not self.logger.handlers:
			try:
				self.log_path.parent.mkdir(parents=True, exist_ok=True)
				handler = RotatingFileHandler(self.log_path, maxBytes=(5 * 1024 * 1024), backupCount=1)
				handler.setLevel(logging.DEBUG)
				handler.setFormatter(logging.Formatter("%(asctime)-15s | %(levelname)s %(message)s",
													   "%d-%m-%Y %H:%M:%S"))
				self.logger.addHandler(handler)
			except OSError:
				# read-only checkout; keep going without a log file
				self.logger.addHandler(logging.NullHandler())

	def log(self, message, level=logging.INFO):
		"""
		Log message

		:param message:  Message to log
		:param level:  Severity level, should be a logging.* constant
		"""
		if self.print_logs and level > logging.DEBUG:
			print("LOG: %s" % message, file=sys.stderr)

		# because we use a wrapper the context location the logger itself is
		# useless (it will always point to this function) so we get it
		# ourselves
		try:
			frame = sys._getframe(2)
			location = frame.f_code.co_filename.split("/").pop() + ":" + str(frame.f_lineno)
			message = "(" + location + "): " + message
		except (AttributeError, ValueError):
			message = ": " + message

		self.logger.log(level, message)

	def debug(self, message):
		"""
		Log DEBUG level message

		:param message: Message to log
		"""
		self.log(message, logging.DEBUG)

	def info(self, message):
		"""
		Log INFO level message

		:param message: Message to log
		"""
		self.log(message, logging.INFO)

	def warning(self, message):
		"""
		Log WARNING level message

		:param message: Message to log
		"""
		self.log(message, logging.WARNING)

	def error(self, message):
		"""
		Log ERROR level message

		:param message: Message to log
		"""
		self.log(message, logging.ERROR)

	def critical(self, message):
		"""
		Log CRITICAL level message

		:param message: Message to log
		"""
		self.log(message, logging.CRITICAL)

	def fatal(self, message):
		"""
		Log FATAL level message

		:param message: Message to log
		"""
		self.log(message, logging.FATAL)
