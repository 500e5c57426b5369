# File persistence for matrix documents
